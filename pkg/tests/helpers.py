"""Independent oracles and random generators shared by the test modules.

Nothing here calls the code path it is used to check: the coherence oracle
classifies subsets numerically through the Gram matrix, the piece oracle
compares every pair of rotations directly, and so on.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations

import numpy as np

from coxco.coxcore import INF, CoxeterSystem

ORDERS = (2, 3, 4, 5, 6, INF)


# --- Coxeter systems -------------------------------------------------------

def triangle(a, b, c) -> CoxeterSystem:
    """m_01 = a, m_12 = b, m_02 = c."""
    return CoxeterSystem.from_pairs(3, {(0, 1): a, (1, 2): b, (0, 2): c})


def k33_right_angled() -> CoxeterSystem:
    return CoxeterSystem.from_pairs(6, {(i, j): 2 for i in range(3) for j in range(3, 6)})


def pentagon_right_angled() -> CoxeterSystem:
    return CoxeterSystem.from_pairs(5, {(i, (i + 1) % 5) if i < 4 else (0, 4): 2 for i in range(5)})


def chain(labels) -> CoxeterSystem:
    return CoxeterSystem.from_pairs(len(labels) + 1,
                                    {(i, i + 1): m for i, m in enumerate(labels)}, default=2)


def _inv(m):
    return 0 if m is INF else Fraction(1, m)


def random_system(rank: int, rng: random.Random, orders=ORDERS) -> CoxeterSystem:
    pairs = {p: rng.choice(orders) for p in combinations(range(rank), 2)}
    return CoxeterSystem.from_pairs(rank, pairs)


def random_two_dimensional(rank: int, rng: random.Random, orders=ORDERS) -> CoxeterSystem:
    """Assign pairs in random order, each from the orders that keep every
    fully assigned triple at sum <= 1 (INF is always admissible)."""
    pairs = list(combinations(range(rank), 2))
    rng.shuffle(pairs)
    m = {}
    for i, j in pairs:
        ok = []
        for cand in orders:
            good = True
            for k in range(rank):
                if k in (i, j):
                    continue
                a = m.get((min(i, k), max(i, k)))
                b = m.get((min(j, k), max(j, k)))
                if a is not None and b is not None and _inv(cand) + _inv(a) + _inv(b) > 1:
                    good = False
                    break
            if good:
                ok.append(cand)
        m[(i, j)] = rng.choice(ok)
    return CoxeterSystem.from_pairs(rank, m)


def permuted(sys: CoxeterSystem, perm) -> CoxeterSystem:
    n = sys.rank
    return CoxeterSystem.from_pairs(
        n, {(perm[i], perm[j]) if perm[i] < perm[j] else (perm[j], perm[i]): sys.m(i, j)
            for i, j in combinations(range(n), 2)})


def gram_positive_definite(sys: CoxeterSystem, idx, tol=1e-9) -> bool:
    """Finiteness oracle: numpy eigenvalues of the cosine matrix on ``idx``."""
    k = len(idx)
    if k == 0:
        return True
    b = np.eye(k)
    for a in range(k):
        for c in range(a + 1, k):
            m = sys.m(idx[a], idx[c])
            b[a, c] = b[c, a] = -1.0 if m is INF else -math.cos(math.pi / m)
    return bool(np.linalg.eigvalsh(b).min() > tol)


def chi_direct(sys: CoxeterSystem, idx) -> Fraction:
    total = Fraction(2 - len(idx), 2)
    for a, c in combinations(idx, 2):
        m = sys.m(a, c)
        if m is not INF:
            total += Fraction(1, 2 * m)
    return total


def brute_force_coherence(sys: CoxeterSystem):
    """``(kind, witness members or None, witness chi or None)`` by scanning all subsets."""
    n = sys.rank
    subsets = [tuple(i for i in range(n) if mask >> i & 1) for mask in range(1 << n)]
    if any(gram_positive_definite(sys, t) for t in subsets if len(t) == 3):
        return "not_applicable", None, None
    witnesses = [s for s in subsets
                 if not gram_positive_definite(sys, s) and chi_direct(sys, s) > 0]
    if not witnesses:
        return "coherent", None, None
    best = min(witnesses, key=lambda s: (len(s), s))
    return "incoherent", best, chi_direct(sys, best)


# --- words and presentations ----------------------------------------------

def naive_pieces(m, relators):
    """Max piece length per relator by comparing every pair of rotations."""
    def inv(w):
        return tuple(-x for x in reversed(w))

    labelled = []  # (relator, word)
    for ri, r in enumerate(relators):
        for w in (r, inv(r)):
            for k in range(len(w)):
                labelled.append((ri, w[k:] + w[:k]))
    out = []
    for ri, r in enumerate(relators):
        mine = {w for rj, w in labelled if rj == ri}
        if any(w in mine for rj, w in labelled if rj != ri):
            out.append(len(r))
            continue
        best = 0
        words = {w for _, w in labelled}
        for x in mine:
            for y in words:
                if y == x:
                    continue
                k = 0
                while k < min(len(x), len(y)) and x[k] == y[k]:
                    k += 1
                best = max(best, k)
        out.append(min(best, len(r)))
    return out


def naive_proper_power(w):
    n = len(w)
    for p in range(1, n):
        if n % p == 0 and w == w[:p] * (n // p):
            return w[:p], n // p
    return None


def naive_cyclically_reduced(w):
    if any(w[i] == -w[i + 1] for i in range(len(w) - 1)):
        return False
    return len(w) < 2 or w[0] != -w[-1]


def random_cyclically_reduced(m, length, rng):
    """Random (not uniform) cyclically reduced word: a reduced walk, retried
    until the ends do not cancel."""
    letters = [k for g in range(1, m + 1) for k in (g, -g)]
    while True:
        w = [rng.choice(letters)]
        while len(w) < length:
            w.append(rng.choice([x for x in letters if x != -w[-1]]))
        w = tuple(w)
        if naive_cyclically_reduced(w):
            return w


# --- surfaces --------------------------------------------------------------

class SurfaceBuilder:
    """Mutable closed-surface cell structure grown by subdivisions."""

    def __init__(self, genus: int):
        if genus == 0:
            self.nv = 3
            self.edges = [(0, 1), (1, 2), (2, 0)]
            self.faces = [[(0, 1), (1, 1), (2, 1)], [(2, -1), (1, -1), (0, -1)]]
        else:
            self.nv = 1
            self.edges = [(0, 0)] * (2 * genus)
            face = []
            for g in range(genus):
                a, b = 2 * g, 2 * g + 1
                face += [(a, 1), (b, 1), (a, -1), (b, -1)]
            self.faces = [face]

    def head(self, t):
        u, v = self.edges[t[0]]
        return v if t[1] == 1 else u

    def tail(self, t):
        u, v = self.edges[t[0]]
        return u if t[1] == 1 else v

    def stellar(self, f):
        boundary = self.faces.pop(f)
        c = self.nv
        self.nv += 1
        spokes = []
        for t in boundary:
            spokes.append(len(self.edges))
            self.edges.append((self.tail(t), c))
        L = len(boundary)
        for k, t in enumerate(boundary):
            self.faces.append([t, (spokes[(k + 1) % L], 1), (spokes[k], -1)])

    def split_edge(self, e):
        u, v = self.edges[e]
        w = self.nv
        self.nv += 1
        self.edges[e] = (u, w)
        e2 = len(self.edges)
        self.edges.append((w, v))
        for face in self.faces:
            new = []
            for t in face:
                if t[0] != e:
                    new.append(t)
                elif t[1] == 1:
                    new += [(e, 1), (e2, 1)]
                else:
                    new += [(e2, -1), (e, -1)]
            face[:] = new

    def diagonal(self, f, i, j):
        """Cut face ``f`` between corners ``i`` and ``j`` (``i + 2 <= j <= i + L - 2``)."""
        boundary = self.faces.pop(f)
        L = len(boundary)
        d = len(self.edges)
        self.edges.append((self.head(boundary[i]), self.head(boundary[j % L])))
        one = [boundary[k % L] for k in range(i + 1, j + 1)] + [(d, -1)]
        two = [boundary[k % L] for k in range(j + 1, i + 1 + L)] + [(d, 1)]
        self.faces += [one, two]

    def mutate(self, rng: random.Random, steps: int):
        for _ in range(steps):
            op = rng.randrange(3)
            if op == 0:
                self.stellar(rng.randrange(len(self.faces)))
            elif op == 1:
                self.split_edge(rng.randrange(len(self.edges)))
            else:
                f = rng.randrange(len(self.faces))
                L = len(self.faces[f])
                if L >= 4:
                    i = rng.randrange(L)
                    self.diagonal(f, i, i + rng.randrange(2, L - 1))

    def build(self, rng: random.Random):
        from coxco.curvature import AngledTwoComplex
        angles = [[Fraction(rng.randint(-6, 12), rng.randint(1, 12)) for _ in face]
                  for face in self.faces]
        return AngledTwoComplex.build(self.nv, self.edges, self.faces, angles)


def random_surface(genus: int, rng: random.Random, steps: int = 12):
    sb = SurfaceBuilder(genus)
    sb.mutate(rng, steps)
    return sb.build(rng)
