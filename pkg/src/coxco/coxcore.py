"""Coxeter systems, bond orders, generator subsets and the graphs read off them.

Bond orders are plain ``int`` values for finite orders and the singleton
:data:`INF` for the absence of a relation.  ``INF`` deliberately supports
ordering but no arithmetic, so ``1 / INF`` or ``2 * INF`` raise instead of
quietly producing a number; use :func:`reciprocal` for exact ``1/m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator, Sequence, Union


@total_ordering
class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, Fraction, float)):
            return False
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, Fraction, float)):
            return True
        return NotImplemented

    def __hash__(self):
        return hash("coxco.INF")

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Order = Union[int, _Infinity]


def reciprocal(m: Order) -> Fraction:
    """Exact ``1/m`` with ``1/INF == 0``."""
    if m is INF:
        return Fraction(0)
    return Fraction(1, m)


def parse_order(token) -> Order:
    """Coerce a raw matrix entry into a bond order (no range checking)."""
    if token is INF:
        return INF
    if isinstance(token, bool):
        raise TypeError(f"not a bond order: {token!r}")
    if isinstance(token, int):
        return token
    if isinstance(token, float):
        if math.isinf(token) and token > 0:
            return INF
        if token.is_integer():
            return int(token)
        raise TypeError(f"not a bond order: {token!r}")
    if isinstance(token, str):
        t = token.strip().lower()
        if t in ("inf", "infinity", "∞", "oo"):
            return INF
        try:
            return int(t)
        except ValueError:
            pass
    raise TypeError(f"not a bond order: {token!r}")


def format_order(m: Order) -> str:
    return "inf" if m is INF else str(m)


class CoxeterError(ValueError):
    """Invalid Coxeter matrix or subset."""


class NotSquare(CoxeterError):
    def __init__(self):
        super().__init__("Coxeter matrix is not square")


class DiagonalNotOne(CoxeterError):
    def __init__(self, i):
        self.i = i
        super().__init__(f"diagonal entry ({i},{i}) must be 1")


class OffDiagonalOne(CoxeterError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"off-diagonal entry ({i},{j}) is 1; only the diagonal may be 1")


class Asymmetric(CoxeterError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"entries ({i},{j}) and ({j},{i}) differ")


class OrderBelowTwo(CoxeterError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"off-diagonal entry ({i},{j}) must be >= 2 or inf")


class IndexOutOfRange(CoxeterError):
    def __init__(self, index, rank):
        self.index, self.rank = index, rank
        super().__init__(f"generator index {index} out of range for rank {rank}")


@dataclass(frozen=True)
class GeneratorSubset:
    """A set of generator indices, stored as a bitmask."""

    mask: int

    @classmethod
    def of(cls, indices: Iterable[int]) -> "GeneratorSubset":
        mask = 0
        for i in indices:
            if i < 0:
                raise IndexOutOfRange(i, None)
            mask |= 1 << i
        return cls(mask)

    @classmethod
    def full(cls, rank: int) -> "GeneratorSubset":
        return cls((1 << rank) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        out = []
        m, i = self.mask, 0
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return tuple(out)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, i) -> bool:
        return i >= 0 and bool(self.mask >> i & 1)

    def issubset(self, other: "GeneratorSubset") -> bool:
        return self.mask & ~other.mask == 0

    def sort_key(self):
        """Popcount first, then lexicographic on the sorted members."""
        return (len(self), self.members)

    def __repr__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class CoxeterSystem:
    orders: tuple[tuple[Order, ...], ...]
    labels: tuple[str, ...] | None = None
    # position of each generator in the system this one was restricted from
    parent_indices: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.orders)

    def m(self, i: int, j: int) -> Order:
        return self.orders[i][j]

    def pairs(self) -> Iterator[tuple[int, int, Order]]:
        n = self.rank
        for i in range(n):
            row = self.orders[i]
            for j in range(i + 1, n):
                yield i, j, row[j]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"v{i}"

    @classmethod
    def from_pairs(cls, rank: int, pairs: dict, default: Order = INF) -> "CoxeterSystem":
        """Build a system from ``{(i, j): m}``; unlisted pairs get ``default``."""
        raw = [[1 if i == j else default for j in range(rank)] for i in range(rank)]
        for (i, j), m in pairs.items():
            raw[i][j] = raw[j][i] = m
        return validate(raw)

    @classmethod
    def uniform(cls, rank: int, m: Order) -> "CoxeterSystem":
        return validate([[1 if i == j else m for j in range(rank)] for i in range(rank)])


def validate(raw: Sequence[Sequence], labels: Sequence[str] | None = None) -> CoxeterSystem:
    """Check a raw square matrix of order tokens and build a :class:`CoxeterSystem`."""
    n = len(raw)
    if any(len(row) != n for row in raw):
        raise NotSquare()
    if labels is not None and len(labels) != n:
        raise CoxeterError("label count does not match rank")
    rows = [[parse_order(t) for t in row] for row in raw]
    for i in range(n):
        if rows[i][i] != 1:
            raise DiagonalNotOne(i)
        for j in range(i + 1, n):
            a, b = rows[i][j], rows[j][i]
            if a != b:
                raise Asymmetric(i, j)
            if a == 1:
                raise OffDiagonalOne(i, j)
            if a is not INF and a < 2:
                raise OrderBelowTwo(i, j)
    return CoxeterSystem(
        tuple(tuple(r) for r in rows),
        tuple(labels) if labels is not None else None,
    )


def restrict(sys: CoxeterSystem, subset: GeneratorSubset | Iterable[int]) -> CoxeterSystem:
    """The standard parabolic subsystem on ``subset``, in increasing index order."""
    if not isinstance(subset, GeneratorSubset):
        subset = GeneratorSubset.of(subset)
    idx = subset.members
    if idx and idx[-1] >= sys.rank:
        raise IndexOutOfRange(idx[-1], sys.rank)
    orders = tuple(tuple(sys.orders[i][j] for j in idx) for i in idx)
    labels = tuple(sys.labels[i] for i in idx) if sys.labels else None
    if sys.parent_indices is not None:
        parents = tuple(sys.parent_indices[i] for i in idx)
    else:
        parents = idx
    return CoxeterSystem(orders, labels, parents)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset
    # edge -> bond order, kept for diagram graphs
    labels: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        for e in self.edges:
            i, j = e
            if not (0 <= i < j < self.n):
                raise ValueError(f"bad edge {e} for {self.n} vertices")

    @classmethod
    def build(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "SimpleGraph":
        return cls(n, frozenset((min(e), max(e)) for e in edges), dict(labels or {}))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in sorted(self.edges):
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        pos = {v: k for k, v in enumerate(vertices)}
        edges = [(pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos]
        return SimpleGraph.build(len(vertices), edges)


def presentation_graph(sys: CoxeterSystem) -> SimpleGraph:
    """Edge ``{i, j}`` whenever ``m_ij`` is finite (there is a relation)."""
    edges = {(i, j): m for i, j, m in sys.pairs() if m is not INF}
    return SimpleGraph.build(sys.rank, edges, edges)


def diagram_graph(sys: CoxeterSystem) -> SimpleGraph:
    """Coxeter diagram: edge ``{i, j}`` whenever ``m_ij >= 3`` (``INF`` included)."""
    edges = {(i, j): m for i, j, m in sys.pairs() if m is INF or m >= 3}
    return SimpleGraph.build(sys.rank, edges, edges)


GAMMA_CONVENTIONS = {
    "presentation": presentation_graph,
    "diagram": diagram_graph,
}


@dataclass(frozen=True)
class GraphShape:
    connected: bool
    tree: bool
    components: tuple[tuple[int, ...], ...]


def components(g: SimpleGraph) -> list[tuple[int, ...]]:
    adj = g.adjacency()
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(tuple(sorted(comp)))
    return out


def graph_shape(g: SimpleGraph) -> GraphShape:
    comps = components(g)
    connected = len(comps) == 1
    return GraphShape(connected, connected and len(g.edges) == g.n - 1, tuple(comps))
