"""Text formats: ``.cox`` Coxeter systems, ``.pres`` presentations, ``.cx2`` angled complexes.

``.cox``::

    rank 3          # first statement
    0 1 3           # i j m with 0 <= i < j < rank, m >= 2 or "inf"
    0 2 inf         # unlisted pairs default to inf

``.pres``::

    gens 2
    rel abAB        # a-z generators, A-Z inverses

``.cx2``::

    vertices 1
    edge 0 0 0
    edge 1 0 0
    face 0 0 1 -0 -1        # signed edge ids, "-" reverses the edge
    angle 0 0 1/2           # face, corner, angle as a multiple of pi
"""

from __future__ import annotations

import logging
import re
from fractions import Fraction

from coxco.coxcore import INF, CoxeterSystem, format_order, validate
from coxco.curvature import AngledTwoComplex, ComplexError
from coxco.smallcancel.pieces import Presentation
from coxco.smallcancel.words import cyclic_reduce, free_reduce, word, word_str

log = logging.getLogger(__name__)


class ParseError(ValueError):
    kind = "ParseError"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class FormatSyntaxError(ParseError):
    kind = "SyntaxError"


class DuplicatePair(ParseError):
    kind = "DuplicatePair"


class BadOrder(ParseError):
    kind = "BadOrder"


class RankMissing(ParseError):
    kind = "RankMissing"


class GeneratorOutOfRange(ParseError):
    kind = "GeneratorOutOfRange"


class EmptyRelator(ParseError):
    kind = "EmptyRelator"


def _statements(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int, what: str) -> int:
    if not re.fullmatch(r"[+-]?\d+", tok):
        raise FormatSyntaxError(f"expected an integer {what}, got {tok!r}", lineno)
    return int(tok)


def parse_coxeter_file(text: str) -> CoxeterSystem:
    rank = None
    pairs: dict[tuple[int, int], object] = {}
    for lineno, toks in _statements(text):
        if rank is None:
            if toks[0] != "rank":
                raise RankMissing("file must start with 'rank N'", lineno)
            if len(toks) != 2:
                raise FormatSyntaxError("expected 'rank N'", lineno)
            rank = _int(toks[1], lineno, "rank")
            if rank < 0:
                raise FormatSyntaxError("rank must be non-negative", lineno)
            continue
        if toks[0] == "rank":
            raise FormatSyntaxError("rank given twice", lineno)
        if len(toks) != 3:
            raise FormatSyntaxError("expected 'i j m'", lineno)
        i, j = _int(toks[0], lineno, "index"), _int(toks[1], lineno, "index")
        if not 0 <= i < j < rank:
            raise FormatSyntaxError(f"need 0 <= i < j < {rank}, got {i} {j}", lineno)
        if (i, j) in pairs:
            raise DuplicatePair(f"pair ({i},{j}) listed twice", lineno)
        tok = toks[2].lower()
        if tok in ("inf", "infinity", "∞"):
            m = INF
        elif re.fullmatch(r"\d+", tok) and int(tok) >= 2:
            m = int(tok)
        else:
            raise BadOrder(f"bond order must be an integer >= 2 or 'inf', got {toks[2]!r}", lineno)
        pairs[(i, j)] = m
    if rank is None:
        raise RankMissing("no 'rank N' line")
    return CoxeterSystem.from_pairs(rank, pairs)


def render_coxeter_file(sys: CoxeterSystem) -> str:
    lines = [f"rank {sys.rank}"]
    lines += [f"{i} {j} {format_order(m)}" for i, j, m in sys.pairs() if m is not INF]
    return "\n".join(lines) + "\n"


def parse_presentation_file(text: str) -> Presentation:
    m = None
    relators = []
    for lineno, toks in _statements(text):
        if m is None:
            if toks[0] != "gens" or len(toks) != 2:
                raise FormatSyntaxError("file must start with 'gens m'", lineno)
            m = _int(toks[1], lineno, "generator count")
            if not 1 <= m <= 26:
                raise FormatSyntaxError("generator count must be between 1 and 26", lineno)
            continue
        if toks[0] != "rel" or len(toks) != 2:
            raise FormatSyntaxError("expected 'rel <word>'", lineno)
        try:
            w = word(toks[1])
        except ValueError as exc:
            raise FormatSyntaxError(str(exc), lineno) from None
        bad = [x for x in w if abs(x) > m]
        if bad:
            raise GeneratorOutOfRange(
                f"letter {word_str(bad[:1])!r} needs more than {m} generators", lineno)
        reduced = cyclic_reduce(free_reduce(w))
        if not reduced:
            raise EmptyRelator(f"relator {toks[1]!r} reduces to the empty word", lineno)
        if reduced != w:
            log.warning("line %d: relator %s reduced to %s", lineno, toks[1], word_str(reduced))
        relators.append(reduced)
    if m is None:
        raise FormatSyntaxError("no 'gens m' line")
    return Presentation(m, tuple(relators))


def render_presentation_file(p: Presentation) -> str:
    return "".join([f"gens {p.generator_count}\n"] + [f"rel {word_str(r)}\n" for r in p.relators])


def parse_angle(tok: str) -> Fraction:
    """``"3/4"``, ``"3/4pi"`` or ``"pi"`` as a coefficient of pi."""
    t = tok.strip().lower()
    if t.endswith("pi"):
        t = t[:-2] or "1"
        t = t.rstrip("*")
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", t):
        raise ValueError(f"bad angle {tok!r}")
    return Fraction(t)


def format_angle(q: Fraction) -> str:
    return f"{q}pi"


def parse_complex_file(text: str) -> AngledTwoComplex:
    nverts = None
    edge_ids: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    face_ids: dict[int, int] = {}
    faces: list[list[tuple[int, int]]] = []
    face_lines: list[int] = []
    angles: dict[tuple[int, int], Fraction] = {}
    pending_angles = []
    for lineno, toks in _statements(text):
        key = toks[0]
        if key == "vertices":
            if len(toks) != 2 or nverts is not None:
                raise FormatSyntaxError("expected a single 'vertices N'", lineno)
            nverts = _int(toks[1], lineno, "vertex count")
        elif key == "edge":
            if len(toks) != 4:
                raise FormatSyntaxError("expected 'edge e u v'", lineno)
            e = _int(toks[1], lineno, "edge id")
            if e in edge_ids:
                raise FormatSyntaxError(f"edge {e} defined twice", lineno)
            edge_ids[e] = len(edges)
            edges.append((_int(toks[2], lineno, "vertex"), _int(toks[3], lineno, "vertex")))
        elif key == "face":
            if len(toks) < 3:
                raise FormatSyntaxError("expected 'face f e1 -e2 ...'", lineno)
            f = _int(toks[1], lineno, "face id")
            if f in face_ids:
                raise FormatSyntaxError(f"face {f} defined twice", lineno)
            boundary = []
            for tok in toks[2:]:
                sign = -1 if tok.startswith("-") else 1
                e = _int(tok.lstrip("+-"), lineno, "edge id")
                if e not in edge_ids:
                    raise FormatSyntaxError(f"unknown edge {e}", lineno)
                boundary.append((edge_ids[e], sign))
            face_ids[f] = len(faces)
            faces.append(boundary)
            face_lines.append(lineno)
        elif key == "angle":
            if len(toks) != 4:
                raise FormatSyntaxError("expected 'angle f idx p/q'", lineno)
            try:
                a = parse_angle(toks[3])
            except ValueError as exc:
                raise FormatSyntaxError(str(exc), lineno) from None
            pending_angles.append((lineno, _int(toks[1], lineno, "face id"),
                                   _int(toks[2], lineno, "corner index"), a))
        else:
            raise FormatSyntaxError(f"unknown statement {key!r}", lineno)
    if nverts is None:
        raise FormatSyntaxError("no 'vertices N' line")
    for lineno, f, k, a in pending_angles:
        if f not in face_ids:
            raise FormatSyntaxError(f"angle for unknown face {f}", lineno)
        if not 0 <= k < len(faces[face_ids[f]]):
            raise FormatSyntaxError(f"face {f} has no corner {k}", lineno)
        if (face_ids[f], k) in angles:
            raise FormatSyntaxError(f"angle for face {f} corner {k} given twice", lineno)
        angles[(face_ids[f], k)] = a
    rows = []
    for fi, boundary in enumerate(faces):
        missing = [k for k in range(len(boundary)) if (fi, k) not in angles]
        if missing:
            raise FormatSyntaxError(f"face has no angle for corner {missing[0]}", face_lines[fi])
        rows.append([angles[(fi, k)] for k in range(len(boundary))])
    try:
        return AngledTwoComplex.build(nverts, edges, faces, rows)
    except ComplexError as exc:
        raise FormatSyntaxError(str(exc)) from None


def render_complex_file(cx: AngledTwoComplex) -> str:
    lines = [f"vertices {cx.vertex_count}"]
    lines += [f"edge {e} {u} {v}" for e, (u, v) in enumerate(cx.edges)]
    for f, boundary in enumerate(cx.faces):
        lines.append(f"face {f} " + " ".join(("-" if d < 0 else "") + str(e) for e, d in boundary))
    for f, row in enumerate(cx.angles):
        lines += [f"angle {f} {k} {a}" for k, a in enumerate(row)]
    return "\n".join(lines) + "\n"
