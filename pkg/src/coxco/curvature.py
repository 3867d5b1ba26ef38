"""Combinatorial curvature of angled 2-complexes.

Angles and curvatures are exact multiples of pi: a value ``q`` of type
:class:`~fractions.Fraction` stands for ``q*pi`` radians throughout.

A face boundary is a cyclic sequence of edge traversals ``(edge, +1|-1)``;
``+1`` runs an edge from its first endpoint to its second.  Corner ``k`` of a
face sits at the vertex where traversal ``k`` ends and traversal ``k+1``
begins, so a face has as many corners as its boundary has traversals.

Vertex curvature is ``2*pi - pi*chi(link(y)) - (sum of corner angles at y)``,
which makes ``sum kappa(f) + sum kappa(y) = 2*pi*chi`` hold for every angled
complex.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from coxco.coxcore import INF, Order


class ComplexError(ValueError):
    pass


class InvalidVertex(ComplexError):
    pass


class InvalidFace(ComplexError):
    pass


class InfiniteOrder(ComplexError):
    pass


class GaussBonnetViolation(ComplexError):
    pass


Traversal = tuple[int, int]  # (edge index, +1 or -1)


@dataclass(frozen=True)
class AngledTwoComplex:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[Traversal, ...], ...]
    angles: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ComplexError(f"edge {e} has an endpoint outside the vertex range")
        if len(self.angles) != len(self.faces):
            raise ComplexError("need one angle list per face")
        for f, boundary in enumerate(self.faces):
            if not boundary:
                raise ComplexError(f"face {f} has an empty boundary")
            if len(self.angles[f]) != len(boundary):
                raise ComplexError(
                    f"face {f} has {len(boundary)} corners but {len(self.angles[f])} angles")
            for e, d in boundary:
                if not 0 <= e < len(self.edges) or d not in (1, -1):
                    raise ComplexError(f"face {f} has a bad traversal ({e}, {d})")
            for k in range(len(boundary)):
                nxt = boundary[(k + 1) % len(boundary)]
                if self.head(boundary[k]) != self.tail(nxt):
                    raise ComplexError(f"face {f} boundary is not closed at corner {k}")

    @classmethod
    def build(cls, vertex_count, edges, faces, angles) -> "AngledTwoComplex":
        return cls(
            vertex_count,
            tuple(tuple(e) for e in edges),
            tuple(tuple((int(e), int(d)) for e, d in face) for face in faces),
            tuple(tuple(a if type(a) is Fraction else Fraction(a) for a in row) for row in angles),
        )

    def tail(self, t: Traversal) -> int:
        u, v = self.edges[t[0]]
        return u if t[1] == 1 else v

    def head(self, t: Traversal) -> int:
        u, v = self.edges[t[0]]
        return v if t[1] == 1 else u

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - len(self.edges) + len(self.faces)

    def corners(self):
        """Yield ``(face, position, vertex, incoming, outgoing, angle)``."""
        for f, boundary in enumerate(self.faces):
            L = len(boundary)
            for k in range(L):
                t_in, t_out = boundary[k], boundary[(k + 1) % L]
                yield f, k, self.head(t_in), t_in, t_out, self.angles[f][k]


@dataclass(frozen=True)
class Link:
    """Link of a vertex: edge-ends as vertices, corners as (multi-)edges."""

    ends: tuple[tuple[int, int], ...]  # (edge, 0 for first endpoint / 1 for second)
    corners: tuple[tuple[int, int], ...]  # pairs of indices into ``ends``

    @property
    def euler_characteristic(self) -> int:
        return len(self.ends) - len(self.corners)


def _check_vertex(cx, y):
    if not 0 <= y < cx.vertex_count:
        raise InvalidVertex(f"no vertex {y}")


def _check_face(cx, f):
    if not 0 <= f < len(cx.faces):
        raise InvalidFace(f"no face {f}")


def link(cx: AngledTwoComplex, y: int) -> Link:
    _check_vertex(cx, y)
    ends = []
    for e, (u, v) in enumerate(cx.edges):
        if u == y:
            ends.append((e, 0))
        if v == y:
            ends.append((e, 1))
    pos = {end: k for k, end in enumerate(ends)}
    corners = []
    for _, _, vertex, t_in, t_out, _ in cx.corners():
        if vertex != y:
            continue
        arriving = (t_in[0], 1 if t_in[1] == 1 else 0)
        leaving = (t_out[0], 0 if t_out[1] == 1 else 1)
        corners.append((pos[arriving], pos[leaving]))
    return Link(tuple(ends), tuple(corners))


def _exact_sum(values) -> Fraction:
    # faces repeat a handful of angle values; add each distinct one once
    # (Fraction hashing is slow, so group on the raw pair)
    counts = Counter((a.numerator, a.denominator) for a in values)
    return sum((Fraction(k * p, q) for (p, q), k in counts.items()), Fraction(0))


def face_curvature(cx: AngledTwoComplex, f: int) -> Fraction:
    """``2*pi - sum over corners of (pi - angle)``, as a multiple of pi."""
    _check_face(cx, f)
    angles = cx.angles[f]
    return 2 - len(angles) + _exact_sum(angles)


def vertex_curvature(cx: AngledTwoComplex, y: int) -> Fraction:
    lk = link(cx, y)
    angle_sum = _exact_sum(a for _, _, v, _, _, a in cx.corners() if v == y)
    return 2 - lk.euler_characteristic - angle_sum


@dataclass(frozen=True)
class CurvatureReport:
    face_curvatures: tuple[Fraction, ...]
    vertex_curvatures: tuple[Fraction, ...]
    total: Fraction
    complex_chi: int


def gauss_bonnet_report(cx: AngledTwoComplex) -> CurvatureReport:
    faces = tuple(face_curvature(cx, f) for f in range(len(cx.faces)))
    verts = tuple(vertex_curvature(cx, y) for y in range(cx.vertex_count))
    total = sum(faces, Fraction(0)) + sum(verts, Fraction(0))
    chi = cx.euler_characteristic
    if total != 2 * chi:
        raise GaussBonnetViolation(
            f"total curvature {total}pi differs from 2*pi*chi = {2 * chi}pi")
    return CurvatureReport(faces, verts, total, chi)


def coxeter_angle(m: Order) -> Fraction:
    """Corner angle ``(1 - 1/m)*pi`` of a Euclidean ``2m``-gon."""
    if m is INF:
        raise InfiniteOrder("no 2-cell exists for an infinite bond order")
    if m < 2:
        raise ValueError(f"bond order must be >= 2, got {m}")
    return 1 - Fraction(1, m)


def with_coxeter_angles(cx: AngledTwoComplex, face_orders: Mapping[int, Order]) -> AngledTwoComplex:
    """Copy of ``cx`` whose listed faces get every corner at ``coxeter_angle(m)``."""
    angles = list(cx.angles)
    for f, m in face_orders.items():
        _check_face(cx, f)
        angles[f] = (coxeter_angle(m),) * len(cx.faces[f])
    return AngledTwoComplex(cx.vertex_count, cx.edges, cx.faces, tuple(angles))


@dataclass(frozen=True)
class FaceCurvatureCheck:
    holds: bool
    witness: int | None = None
    curvature: Fraction | None = None


def check_nonpositive_face_curvature(cx: AngledTwoComplex) -> FaceCurvatureCheck:
    for f in range(len(cx.faces)):
        k = face_curvature(cx, f)
        if k > 0:
            return FaceCurvatureCheck(False, f, k)
    return FaceCurvatureCheck(True)


def polygon(angles: Sequence) -> AngledTwoComplex:
    """A single closed disc: an ``L``-gon with distinct vertices and edges."""
    L = len(angles)
    edges = [(k, (k + 1) % L) for k in range(L)]
    face = [(k, 1) for k in range(L)]
    return AngledTwoComplex.build(L, edges, [face], [angles])
