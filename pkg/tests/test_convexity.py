from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedhom.convexity import agree, between, convex_hull, hull, is_convex
from mixedhom.graph import GraphError, build
from mixedhom.search import iter_simple_colourings

from conftest import mixed_graphs


def brute_hull(g, x):
    """Smallest convex superset of ``x`` by checking every superset."""
    rest = [v for v in g.vertices if v not in x]
    best = None
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            c = set(x) | set(extra)
            closed = all(
                not (g.rel(u, v) and g.rel(w, v) and g.rel(u, v) != g.rel(w, v))
                for u, w in combinations(c, 2)
                for v in rest
                if v not in c
            )
            if closed:
                if best is None or len(c) < len(best):
                    best = c
        if best is not None:
            return frozenset(best)
    return frozenset(g.vertices)


def test_agree_examples():
    g = build(1, 2, 4, [("a", 1, 0, 2), ("a", 1, 1, 2), ("e", 1, 3, 0), ("e", 2, 3, 1)])
    assert agree(g, 0, 1, 2)
    assert not agree(g, 0, 1, 3)
    h = build(1, 0, 3, [("a", 1, 0, 1), ("a", 1, 1, 2)])
    assert not agree(h, 0, 2, 1)
    with pytest.raises(GraphError):
        agree(h, 0, 1, 2)


def test_between_examples(t3, c3):
    assert between(c3, 0, 1, 2)
    assert not between(t3, 0, 1, 2)
    assert not between(build(1, 0, 3), 0, 1, 2)


def test_hull_examples(t3, c3):
    assert convex_hull(c3, {0}).final == {0}
    trace = convex_hull(c3, {0, 1})
    assert trace.final == {0, 1, 2}
    assert trace.stages == ({0, 1}, {0, 1, 2})
    assert trace.additions == ({2: (0, 1)},)
    assert convex_hull(t3, {0, 1}).final == {0, 1}


def test_is_convex_examples(t3, c3):
    assert is_convex(c3, {0, 1, 2})
    assert is_convex(t3, {0, 1})
    assert not is_convex(c3, {0, 1})


def test_empty_hull_rejected(c3):
    with pytest.raises(GraphError):
        convex_hull(c3, [])


def test_witness_is_least_pair():
    # 3 is between (0, 1), (0, 2) and (1, 2)
    g = build(1, 1, 4, [("a", 1, 0, 3), ("a", 1, 3, 1), ("e", 1, 2, 3)])
    trace = convex_hull(g, {0, 1, 2})
    assert trace.additions[0][3] == (0, 1)


@settings(max_examples=150)
@given(mixed_graphs(max_vertices=7), st.data())
def test_hull_matches_subset_enumeration(g, data):
    x = data.draw(st.sets(st.sampled_from(list(g.vertices)), min_size=1))
    trace = convex_hull(g, x)
    assert trace.final == brute_hull(g, x)
    assert trace.stages[0] == frozenset(x)
    for a, b in zip(trace.stages, trace.stages[1:]):
        assert a < b
    for stage, added in zip(trace.stages, trace.additions):
        for v, (u, w) in added.items():
            assert u in stage and w in stage and between(g, u, w, v)


@given(mixed_graphs(max_vertices=8), st.data())
def test_hull_is_convex_idempotent_monotone(g, data):
    vs = list(g.vertices)
    x = data.draw(st.sets(st.sampled_from(vs), min_size=1))
    y = x | data.draw(st.sets(st.sampled_from(vs)))
    hx = hull(g, x)
    assert is_convex(g, hx)
    assert hull(g, hx) == hx
    assert hx <= hull(g, y)


@settings(max_examples=60)
@given(mixed_graphs(max_vertices=6))
def test_simple_colourings_are_constant_on_hulls(g):
    for p in iter_simple_colourings(g):
        for block in p.blocks:
            assert hull(g, block) == frozenset(block)
