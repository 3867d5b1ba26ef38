"""Coherence of two-dimensional Coxeter groups.

A two-dimensional Coxeter group is coherent exactly when every infinite
standard subgroup ``H`` has ``chi(H) <= 0``.  Everything here is exact:
Euler characteristics are :class:`fractions.Fraction` values and finiteness
comes from :mod:`coxco.classify`.

Subsets are enumerated by increasing size and then lexicographically, so the
first positive-chi infinite subset found is also the reported (minimal,
lexicographically least) witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Callable, Iterator

from coxco.classify import FinitenessVerdict, is_finite
from coxco.coxcore import (
    INF,
    GAMMA_CONVENTIONS,
    CoxeterSystem,
    GeneratorSubset,
    reciprocal,
    restrict,
)

DEFAULT_MAX_RANK = 26

EQUIVALENCES_NOTE = (
    "coherent; equivalently (finitely generated, virtually RFRS, dimension 2): "
    "virtually free-by-cyclic, homologically coherent over Q, Q[G] coherent, "
    "second L2-Betti number zero, virtually pi_1 of a 2-complex with "
    "nonpositive immersions"
)


class NotApplicable(ValueError):
    """Raised when a formula's hypotheses do not hold for the given system."""


class RankTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class TwoDimReport:
    two_dimensional: bool
    violating_triple: tuple[int, int, int] | None = None
    violating_sum: Fraction | None = None


@dataclass(frozen=True)
class Verdict:
    kind: str  # "coherent" | "incoherent" | "not_applicable"
    witness: GeneratorSubset | None = None
    witness_chi: Fraction | None = None
    reason: str | None = None


@dataclass(frozen=True)
class NpscResult:
    holds: bool
    witness: GeneratorSubset | None = None
    witness_chi: Fraction | None = None


@dataclass(frozen=True)
class CoherenceReport:
    two_dimensional: TwoDimReport
    finiteness: FinitenessVerdict
    chi: Fraction
    verdict: Verdict
    l2_profile: tuple[Fraction, Fraction, Fraction] | None
    npsc: NpscResult
    equivalences_note: str | None = None
    infinite_subsets_checked: int = field(default=0, compare=False)

    @property
    def group_infinite(self) -> bool:
        return not self.finiteness.finite


def is_two_dimensional(sys: CoxeterSystem) -> TwoDimReport:
    """Check ``1/m_ij + 1/m_jk + 1/m_ki <= 1`` over all triples, in lex order."""
    n = sys.rank
    inv = [[reciprocal(sys.m(i, j)) if i != j else None for j in range(n)] for i in range(n)]
    for i, j, k in combinations(range(n), 3):
        s = inv[i][j] + inv[j][k] + inv[i][k]
        if s > 1:
            return TwoDimReport(False, (i, j, k), s)
    return TwoDimReport(True)


def euler_characteristic(sys: CoxeterSystem) -> Fraction:
    """``1 - n/2 + sum_{i<j} 1/(2 m_ij)`` with ``1/(2*INF) = 0``.

    Meaningful as the group's rational Euler characteristic only for
    two-dimensional systems; callers decide applicability.
    """
    total = 1 - Fraction(sys.rank, 2)
    for _, _, m in sys.pairs():
        total += reciprocal(m) / 2
    return total


class _ChiTable:
    """Subset Euler characteristics on a common integer scale.

    ``chi(S) * scale`` is an integer for every subset, so subset sums avoid
    Fraction arithmetic inside the enumeration loop.
    """

    def __init__(self, sys: CoxeterSystem):
        finite = [m for _, _, m in sys.pairs() if m is not INF]
        self.scale = 2 * lcm(1, *finite)
        n = sys.rank
        self.w = [[0] * n for _ in range(n)]
        for i, j, m in sys.pairs():
            if m is not INF:
                self.w[i][j] = self.w[j][i] = self.scale // (2 * m)

    def scaled(self, members) -> int:
        total = self.scale - len(members) * (self.scale // 2)
        w = self.w
        for a in range(len(members)):
            row = w[members[a]]
            for b in range(a + 1, len(members)):
                total += row[members[b]]
        return total

    def chi(self, members) -> Fraction:
        return Fraction(self.scaled(members), self.scale)


def _subsets_by_size(n: int, min_size: int = 0) -> Iterator[tuple[int, ...]]:
    for k in range(min_size, n + 1):
        yield from combinations(range(n), k)


def _check_rank(sys: CoxeterSystem, max_rank: int | None):
    if max_rank is not None and sys.rank > max_rank:
        raise RankTooLarge(
            f"rank {sys.rank} exceeds the enumeration limit {max_rank} "
            f"(2^{sys.rank} subsets); raise max_rank to override"
        )


def enumerate_infinite_subsets(
    sys: CoxeterSystem, max_rank: int | None = DEFAULT_MAX_RANK
) -> Iterator[GeneratorSubset]:
    """Yield every subset generating an infinite standard subgroup.

    Order: increasing size, then lexicographic.  For two-dimensional systems
    every rank-3 subsystem is infinite and infiniteness passes to supersets,
    so the infinite subsets are all subsets of size >= 3 plus the pairs with
    ``m_ij = INF``.  Otherwise each subset is classified.
    """
    _check_rank(sys, max_rank)
    n = sys.rank
    if is_two_dimensional(sys).two_dimensional:
        for pair in combinations(range(n), 2):
            if sys.m(*pair) is INF:
                yield GeneratorSubset.of(pair)
        for s in _subsets_by_size(n, 3):
            yield GeneratorSubset.of(s)
        return
    for s in _subsets_by_size(n):
        if not is_finite(restrict(sys, s)).finite:
            yield GeneratorSubset.of(s)


def l2_betti_profile(
    sys: CoxeterSystem, chi: Fraction | None = None, *, check: bool = True
) -> tuple[Fraction, Fraction, Fraction]:
    """L2-Betti numbers ``(b0, b1, b2) = (0, -chi, 0)`` of a coherent infinite
    two-dimensional Coxeter group.

    With ``check=True`` the hypotheses (two-dimensional, infinite, coherent)
    are verified and :class:`NotApplicable` raised when one fails.
    """
    if chi is None:
        chi = euler_characteristic(sys)
    if check:
        if not is_two_dimensional(sys).two_dimensional:
            raise NotApplicable("system is not two-dimensional")
        if is_finite(sys).finite:
            raise NotApplicable("group is finite (b0 is nonzero)")
        if _first_positive_witness(sys, _ChiTable(sys), "minimal", None)[0] is not None:
            raise NotApplicable("group is incoherent")
    return (Fraction(0), -chi, Fraction(0))


def _first_positive_witness(sys, table, witnesses, max_rank):
    """Least (size, lex) infinite subset with chi > 0 for a 2-dim system.

    ``witnesses="first"`` scans masks in plain integer order instead, which
    finds *a* witness sooner on large ranks but not necessarily the least.
    """
    n = sys.rank
    checked = 0
    if witnesses == "first":
        infinite_pairs = {p for p in combinations(range(n), 2) if sys.m(*p) is INF}
        for mask in range(1, 1 << n):
            members = GeneratorSubset(mask).members
            if len(members) < 3 and members not in infinite_pairs:
                continue
            checked += 1
            if table.scaled(members) > 0:
                return GeneratorSubset(mask), table.chi(members), checked
        return None, None, checked
    if witnesses != "minimal":
        raise ValueError(f"unknown witness policy {witnesses!r}")
    for s in enumerate_infinite_subsets(sys, max_rank):
        checked += 1
        members = s.members
        if table.scaled(members) > 0:
            return s, table.chi(members), checked
    return None, None, checked


def _connected_mask(adj: list[int], mask: int) -> bool:
    start = mask & -mask
    seen, frontier = start, start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        v = low.bit_length() - 1
        new = adj[v] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def npsc_graph_criterion(sys: CoxeterSystem, convention: str = "presentation",
                         max_rank: int | None = DEFAULT_MAX_RANK) -> NpscResult:
    """Every nonempty subset whose graph is connected but not a tree has chi <= 0.

    ``convention`` picks the graph attached to a subset: ``"presentation"``
    (edge when ``m_ij`` is finite) or ``"diagram"`` (edge when ``m_ij >= 3``).
    The witness is the least such subset with chi > 0, by size then lex.
    """
    _check_rank(sys, max_rank)
    graph = GAMMA_CONVENTIONS[convention](sys)
    n = sys.rank
    adj = [0] * n
    for i, j in graph.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    table = _ChiTable(sys)
    for s in _subsets_by_size(n, 3):
        mask = 0
        for v in s:
            mask |= 1 << v
        edge_count = sum(bin(adj[v] & mask).count("1") for v in s) // 2
        if edge_count < len(s):  # a forest or disconnected; cannot be a non-tree connected graph
            continue
        if not _connected_mask(adj, mask):
            continue
        if table.scaled(s) > 0:
            return NpscResult(False, GeneratorSubset(mask), table.chi(s))
    return NpscResult(True)


def decide_coherence(
    sys: CoxeterSystem,
    witnesses: str = "minimal",
    max_rank: int | None = DEFAULT_MAX_RANK,
    convention: str = "presentation",
) -> CoherenceReport:
    _check_rank(sys, max_rank)
    two_dim = is_two_dimensional(sys)
    finiteness = is_finite(sys)
    chi = euler_characteristic(sys)
    npsc = npsc_graph_criterion(sys, convention, max_rank)

    if not two_dim.two_dimensional:
        verdict = Verdict("not_applicable", reason="theorem hypothesis fails: not two-dimensional")
        return CoherenceReport(two_dim, finiteness, chi, verdict, None, npsc)

    table = _ChiTable(sys)
    witness, witness_chi, checked = _first_positive_witness(sys, table, witnesses, max_rank)
    if witness is not None:
        verdict = Verdict("incoherent", witness, witness_chi)
        return CoherenceReport(two_dim, finiteness, chi, verdict, None, npsc,
                               infinite_subsets_checked=checked)

    profile = None
    if not finiteness.finite:
        profile = l2_betti_profile(sys, chi, check=False)
    return CoherenceReport(two_dim, finiteness, chi, Verdict("coherent"), profile, npsc,
                           EQUIVALENCES_NOTE, infinite_subsets_checked=checked)
