"""Finite-type recognition for Coxeter systems.

The decision is combinatorial: split along the Coxeter diagram into
irreducible components and match each labelled diagram against the catalog
A_n, B_n, D_n, E6-8, F4, H3, H4, I2(m).  The cosine (Gram) matrix and its
positive-definiteness test are kept only as an independent numeric oracle.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from coxco.coxcore import (
    INF,
    CoxeterError,
    CoxeterSystem,
    GeneratorSubset,
    components,
    diagram_graph,
    restrict,
)


class NotIrreducible(CoxeterError):
    pass


class NotSymmetric(ValueError):
    pass


@dataclass(frozen=True, order=True)
class IrreducibleType:
    family: str
    param: int

    def __post_init__(self):
        # I2(3) = A2 and I2(4) = B2 have a single canonical spelling
        if self.family == "I" and self.param in (3, 4):
            raise ValueError("use A2 / B2 for I2(3) / I2(4)")

    @classmethod
    def dihedral(cls, m: int) -> "IrreducibleType":
        if m == 3:
            return cls("A", 2)
        if m == 4:
            return cls("B", 2)
        return cls("I", m)

    @property
    def rank(self) -> int:
        return 2 if self.family == "I" else self.param

    def __str__(self):
        if self.family == "I":
            return f"I2({self.param})"
        return f"{self.family}{self.param}"


@dataclass(frozen=True)
class FinitenessVerdict:
    finite: bool
    components: tuple[IrreducibleType, ...] = ()
    witness: GeneratorSubset | None = None

    def __str__(self):
        if self.finite:
            return "finite " + (" x ".join(map(str, self.components)) or "(trivial)")
        return f"infinite (witness {self.witness!r})"


def irreducible_components(sys: CoxeterSystem) -> list[GeneratorSubset]:
    """Connected components of the Coxeter diagram, ordered by least index."""
    return [GeneratorSubset.of(c) for c in components(diagram_graph(sys))]


def _branch_arms(adj, centre):
    arms = []
    for start in adj[centre]:
        length, prev, v = 1, centre, start
        while True:
            nxt = [w for w in adj[v] if w != prev]
            if not nxt:
                break
            prev, v = v, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)


def match_finite_type(sys: CoxeterSystem) -> IrreducibleType | None:
    """Catalog type of an irreducible system, or ``None`` if it is infinite."""
    n = sys.rank
    g = diagram_graph(sys)
    if n == 0 or len(components(g)) != 1:
        raise NotIrreducible("system has %d diagram components" % len(components(g)))
    if n == 1:
        return IrreducibleType("A", 1)
    if len(g.edges) != n - 1:
        return None
    labels = [g.labels[e] for e in g.edges]
    if INF in labels:
        return None
    if n == 2:
        return IrreducibleType.dihedral(labels[0])

    adj = g.adjacency()
    degrees = [len(a) for a in adj]
    if max(degrees) > 3:
        return None
    branch = [v for v in range(n) if degrees[v] == 3]
    heavy = Counter(m for m in labels if m != 3)

    if branch:
        if len(branch) > 1 or heavy:
            return None
        arms = tuple(_branch_arms(adj, branch[0]))
        if arms[0] == 1 and arms[1] == 1:
            return IrreducibleType("D", n)
        return {(1, 2, 2): IrreducibleType("E", 6),
                (1, 2, 3): IrreducibleType("E", 7),
                (1, 2, 4): IrreducibleType("E", 8)}.get(arms)

    # a path from here on
    if not heavy:
        return IrreducibleType("A", n)
    if sum(heavy.values()) > 1:
        return None
    (m,) = heavy
    e = next(e for e in g.edges if g.labels[e] == m)
    at_end = degrees[e[0]] == 1 or degrees[e[1]] == 1
    if m == 4:
        if at_end:
            return IrreducibleType("B", n)
        return IrreducibleType("F", 4) if n == 4 else None
    if m == 5 and at_end and n in (3, 4):
        return IrreducibleType("H", n)
    return None


def is_finite(sys: CoxeterSystem) -> FinitenessVerdict:
    types = []
    for comp in irreducible_components(sys):
        t = match_finite_type(restrict(sys, comp))
        if t is None:
            return FinitenessVerdict(False, witness=comp)
        types.append(t)
    return FinitenessVerdict(True, tuple(types))


def gram_matrix(sys: CoxeterSystem) -> np.ndarray:
    """Cosine matrix ``B_ij = -cos(pi/m_ij)``; ``INF`` maps to ``-1``."""
    n = sys.rank
    b = np.eye(n)
    for i, j, m in sys.pairs():
        if m is INF:
            b[i, j] = b[j, i] = -1.0
        elif m != 2:  # cos(pi/2) is exactly 0, which floating point misses
            b[i, j] = b[j, i] = -math.cos(math.pi / m)
    return b


def is_positive_definite(b, tol: float = 1e-9) -> bool:
    """All pivots of an unpivoted symmetric elimination exceed ``tol``."""
    a = [list(map(float, row)) for row in b]
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i][j] - a[j][i]) > 1e-12:
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
    for k in range(n):
        p = a[k][k]
        if p <= tol:
            return False
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                row_k, row_i = a[k], a[i]
                for j in range(k + 1, n):
                    row_i[j] -= f * row_k[j]
    return True
