import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxco.coxcore import (
    INF,
    Asymmetric,
    CoxeterSystem,
    DiagonalNotOne,
    GeneratorSubset,
    IndexOutOfRange,
    NotSquare,
    OffDiagonalOne,
    OrderBelowTwo,
    SimpleGraph,
    diagram_graph,
    graph_shape,
    presentation_graph,
    reciprocal,
    restrict,
    validate,
)
from helpers import k33_right_angled, random_system, triangle


def test_validate_dihedral():
    s = validate([[1, 3], [3, 1]])
    assert s.rank == 2 and s.m(0, 1) == 3


@pytest.mark.parametrize("raw, exc", [
    ([[1, 1], [1, 1]], OffDiagonalOne),
    ([[1, 3], [4, 1]], Asymmetric),
    ([[2, 3], [3, 1]], DiagonalNotOne),
    ([[1, 0], [0, 1]], OrderBelowTwo),
    ([[1, 3], [3]], NotSquare),
])
def test_validate_errors(raw, exc):
    with pytest.raises(exc):
        validate(raw)


def test_off_diagonal_one_reports_position():
    with pytest.raises(OffDiagonalOne) as info:
        validate([[1, 1], [1, 1]])
    assert (info.value.i, info.value.j) == (0, 1)


def test_validate_accepts_infinity_tokens():
    s = validate([[1, "inf"], [float("inf"), 1]])
    assert s.m(0, 1) is INF


def test_infinity_refuses_arithmetic():
    with pytest.raises(TypeError):
        1 / INF
    with pytest.raises(TypeError):
        INF + 1
    assert reciprocal(INF) == 0 and reciprocal(4) == Fraction(1, 4)
    assert INF > 10**100 and not INF < 3


def test_restrict_examples():
    s = CoxeterSystem.uniform(5, 3)
    assert restrict(s, [0, 1, 2]) == triangle(3, 3, 3)
    assert restrict(s, []).rank == 0
    one = restrict(s, [1])
    assert one.rank == 1 and one.parent_indices == (1,)
    with pytest.raises(IndexOutOfRange):
        restrict(s, [5])


def test_restrict_records_parent_indices_through_composition():
    s = random_system(6, random.Random(3))
    inner = restrict(restrict(s, [1, 3, 4, 5]), [0, 2])
    assert inner.parent_indices == (1, 4)
    assert inner == restrict(s, [1, 4])


systems = st.integers(0, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.sampled_from([2, 3, 4, 5, 6, INF]),
                                             min_size=n * (n - 1) // 2,
                                             max_size=n * (n - 1) // 2)))


def _build(drawn):
    n, orders = drawn
    return CoxeterSystem.from_pairs(n, dict(zip(combinations(range(n), 2), orders)))


@given(systems, st.data())
def test_restrict_is_functorial(drawn, data):
    s = _build(drawn)
    assert restrict(s, range(s.rank)) == s
    S = data.draw(st.sets(st.integers(0, max(s.rank - 1, 0))).filter(lambda x: all(i < s.rank for i in x)))
    S = sorted(S)
    sub = restrict(s, S)
    T = data.draw(st.sets(st.integers(0, max(len(S) - 1, 0))).filter(lambda x: all(i < len(S) for i in x)))
    image = [S[t] for t in sorted(T)]
    assert restrict(sub, T) == restrict(s, image)


@given(systems, st.data())
def test_presentation_graph_commutes_with_restrict(drawn, data):
    s = _build(drawn)
    S = sorted(data.draw(st.sets(st.integers(0, 5))) & set(range(s.rank)))
    assert presentation_graph(restrict(s, S)).edges == presentation_graph(s).induced(S).edges


def test_presentation_graph_examples():
    g = presentation_graph(triangle(3, INF, 3))
    shape = graph_shape(g)
    assert shape.connected and shape.tree and len(g.edges) == 2
    g = presentation_graph(k33_right_angled())
    assert len(g.edges) == 9
    shape = graph_shape(g)
    assert shape.connected and not shape.tree
    assert not graph_shape(presentation_graph(CoxeterSystem.uniform(3, INF))).connected


def test_diagram_graph_examples():
    a3 = CoxeterSystem.from_pairs(3, {(0, 1): 3, (1, 2): 3, (0, 2): 2})
    assert diagram_graph(a3).edges == {(0, 1), (1, 2)}
    shape = graph_shape(diagram_graph(validate([[1, 2], [2, 1]])))
    assert not shape.connected and len(shape.components) == 2
    g = diagram_graph(CoxeterSystem.from_pairs(3, {(0, 1): 4, (0, 2): 2, (1, 2): 2}))
    assert g.edges == {(0, 1)} and g.labels[(0, 1)] == 4
    assert diagram_graph(CoxeterSystem.uniform(2, INF)).edges == {(0, 1)}


@pytest.mark.parametrize("n, edges, connected, tree, ncomp", [
    (5, [(i, (i + 1) % 5) for i in range(5)], True, False, 1),
    (4, [(0, 1), (1, 2), (2, 3)], True, True, 1),
    (2, [], False, False, 2),
    (1, [], True, True, 1),
    (0, [], False, False, 0),
])
def test_graph_shape(n, edges, connected, tree, ncomp):
    shape = graph_shape(SimpleGraph.build(n, edges))
    assert (shape.connected, shape.tree, len(shape.components)) == (connected, tree, ncomp)


@given(st.integers(1, 8).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                                            .filter(lambda e: e[0] != e[1])))))
def test_tree_implies_connected_and_edge_count(drawn):
    n, edges = drawn
    g = SimpleGraph.build(n, edges)
    shape = graph_shape(g)
    if shape.tree:
        assert shape.connected
    if shape.connected:
        assert shape.tree == (len(g.edges) == n - 1)
    assert sorted(v for c in shape.components for v in c) == list(range(n))


@given(st.integers(-10**30, 10**30), st.integers(1, 10**30),
       st.integers(-10**30, 10**30), st.integers(1, 10**30))
def test_rational_round_trip(a, b, c, d):
    x, y = Fraction(a, b), Fraction(c, d)
    z = (x + y) - y
    assert z == x and z.denominator > 0
    assert z.numerator * x.denominator == x.numerator * z.denominator


def test_generator_subset_basics():
    s = GeneratorSubset.of([4, 0, 2])
    assert s.members == (0, 2, 4) and len(s) == 3 and 2 in s and 1 not in s
    assert GeneratorSubset.of([0, 2]).issubset(s)
    assert GeneratorSubset.full(3).members == (0, 1, 2)
