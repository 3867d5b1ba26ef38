"""Symmetrized relator sets, pieces and the metric small-cancellation test.

A piece of a relator ``r`` is a common prefix of two distinct elements of the
symmetrized set, one of them a rotation of ``r`` or ``r^-1``.  For a given
element ``x`` the longest such prefix is found at a neighbour of ``x`` in the
sorted order of the (distinct) symmetrized elements, so one sort plus a
neighbour scan replaces the all-pairs comparison.

Rotations of one relator that coincide (proper powers) collapse to a single
element and are not pieces; proper powers are reported separately.  The same
word arising from two different relators is a collision and makes the whole
relator a piece.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from coxco.smallcancel.words import (
    Word,
    inverse,
    is_cyclically_reduced,
    is_proper_power,
    power_str,
    word_str,
)

SIXTH = Fraction(1, 6)


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relators: tuple[Word, ...]

    def __post_init__(self):
        if self.generator_count < 1:
            raise PresentationError("need at least one generator")
        for k, r in enumerate(self.relators):
            if not r:
                raise PresentationError(f"relator {k} is empty")
            if any(x == 0 or abs(x) > self.generator_count for x in r):
                raise PresentationError(f"relator {k} uses an unknown generator")
            if not is_cyclically_reduced(r):
                raise PresentationError(f"relator {k} is not cyclically reduced")

    @classmethod
    def of(cls, m: int, relators: Sequence) -> "Presentation":
        from coxco.smallcancel.words import word
        return cls(m, tuple(word(r) if isinstance(r, str) else tuple(r) for r in relators))

    @property
    def euler_characteristic(self) -> int:
        return 1 - self.generator_count + len(self.relators)


@dataclass(frozen=True)
class SymmetrizedSet:
    elements: tuple[Word, ...]
    # per element: every (relator index, rotation, inverted) producing it
    provenance: tuple[tuple[tuple[int, int, bool], ...], ...]

    def __len__(self):
        return len(self.elements)

    def relators_of(self, k: int) -> set[int]:
        return {p[0] for p in self.provenance[k]}


def symmetrize(p: Presentation) -> SymmetrizedSet:
    index: dict[Word, list] = {}
    for ri, r in enumerate(p.relators):
        for inverted, w in ((False, r), (True, inverse(r))):
            for rot in range(len(w)):
                index.setdefault(w[rot:] + w[:rot], []).append((ri, rot, inverted))
    elements = sorted(index)
    return SymmetrizedSet(tuple(elements), tuple(tuple(index[e]) for e in elements))


def _lcp(x: Word, y: Word) -> int:
    n = min(len(x), len(y))
    k = 0
    while k < n and x[k] == y[k]:
        k += 1
    return k


@dataclass(frozen=True)
class RelatorPieces:
    length: int
    max_piece_length: int
    witness: tuple[Word, Word] | None
    collision: bool = False

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.max_piece_length, self.length)


@dataclass(frozen=True)
class PieceReport:
    relators: tuple[RelatorPieces, ...]
    c_prime_sixth: bool

    def satisfies(self, lam: Fraction) -> bool:
        return all(rp.max_piece_length < lam * rp.length for rp in self.relators)


def piece_report(p: Presentation, sym: SymmetrizedSet | None = None) -> PieceReport:
    if sym is None:
        sym = symmetrize(p)
    els = sym.elements  # already sorted and distinct
    n_rel = len(p.relators)
    best = [0] * n_rel
    witness: list = [None] * n_rel
    collided = [False] * n_rel

    # adjacent[k] = lcp(els[k], els[k+1]); the best partner of els[k] is a sorted neighbour
    adjacent = [_lcp(els[k], els[k + 1]) for k in range(len(els) - 1)]
    for k, x in enumerate(els):
        owners = sym.relators_of(k)
        if len(owners) > 1:
            for ri in owners:
                collided[ri] = True
                witness[ri] = (x, x)
            continue
        (ri,) = owners
        if collided[ri]:
            continue
        for nb, c in ((k - 1, adjacent[k - 1] if k else -1),
                      (k + 1, adjacent[k] if k < len(adjacent) else -1)):
            if c < 0:
                continue
            if c > best[ri] or witness[ri] is None:
                best[ri], witness[ri] = c, (x, els[nb])

    rows = []
    for ri, r in enumerate(p.relators):
        L = len(r)
        piece = L if collided[ri] else min(best[ri], L)
        rows.append(RelatorPieces(L, piece, witness[ri], collided[ri]))
    rows = tuple(rows)
    return PieceReport(rows, all(rp.max_piece_length < SIXTH * rp.length for rp in rows))


def is_metric_small_cancellation(p: Presentation, lam: Fraction = SIXTH) -> bool:
    """``C'(lam)``: every piece of every relator is strictly shorter than ``lam*|r|``."""
    return piece_report(p).satisfies(Fraction(lam))


@dataclass(frozen=True)
class Certificate:
    certified: bool
    chi: int | None = None
    reason: str | None = None
    facts: tuple[tuple[str, bool], ...] = ()

    def __str__(self):
        if self.certified:
            return f"certified incoherent (chi = {self.chi})"
        return f"inconclusive ({self.reason})"


def incoherence_certificate(p: Presentation, sym: SymmetrizedSet | None = None,
                            report: PieceReport | None = None) -> Certificate:
    """Per-instance incoherence proof for ``<s_1..s_m | r_1..r_n>``.

    Certified when the relators are nonempty, cyclically reduced, not proper
    powers, pairwise non-overlapping as symmetrized sets, satisfy C'(1/6),
    and ``n > m - 1``.  Then the presentation complex is aspherical, so
    ``chi = 1 - m + n > 0`` is the group's Euler characteristic and the
    second L2-Betti number is positive.
    """
    m, n = p.generator_count, len(p.relators)
    for k, r in enumerate(p.relators):
        if not r or not is_cyclically_reduced(r):
            return Certificate(False, reason=f"relator {k} is not cyclically reduced")
    for k, r in enumerate(p.relators):
        pp = is_proper_power(r)
        if pp is not None:
            return Certificate(False, reason=f"proper power: {power_str(*pp)} (relator {k})")
    if sym is None:
        sym = symmetrize(p)
    for k in range(len(sym)):
        owners = sorted(sym.relators_of(k))
        if len(owners) > 1:
            return Certificate(
                False, reason=f"relators {owners[0]} and {owners[1]} share "
                              f"{word_str(sym.elements[k])}")
    if report is None:
        report = piece_report(p, sym)
    if not report.c_prime_sixth:
        bad = next(k for k, rp in enumerate(report.relators) if rp.ratio >= SIXTH)
        rp = report.relators[bad]
        return Certificate(
            False, reason=f"not C'(1/6): relator {bad} has a piece of length "
                          f"{rp.max_piece_length} of {rp.length}")
    if n <= m - 1:
        return Certificate(False, reason="n <= m-1")
    facts = (("c16", True), ("no_proper_powers", True), ("n_gt_m_minus_1", True))
    return Certificate(True, chi=1 - m + n, facts=facts)
