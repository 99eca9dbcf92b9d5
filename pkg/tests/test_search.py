from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedhom.convexity import between
from mixedhom.families import directed_cycle, enumerate_tournaments, transitive_tournament
from mixedhom.graph import GraphError, MixedGraph, VertexMap, build
from mixedhom.search import (
    BudgetExceeded,
    Partition,
    brute_chi,
    brute_chi_s,
    compose,
    enumerate_min_simple_colourings,
    find_homomorphism,
    find_simple_homomorphism,
    has_simple_two_colouring,
    is_colouring,
    is_homomorphism,
    is_simple_colouring,
    is_simple_homomorphism,
    iter_simple_colourings,
    quotient,
)

from conftest import mixed_graphs


def all_partitions(items):
    """Every set partition of ``items`` (independent of the RGS enumerator)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in all_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1 :]
        yield [[first]] + p


def naive_simple_ok(g, blocks):
    where = {v: i for i, b in enumerate(blocks) for v in b}
    if g.order > 1 and len(blocks) < 2:
        return False
    seen = {}
    for u in g.vertices:
        for v, a in g.neighbours(u).items():
            if where[u] != where[v] and seen.setdefault((where[u], where[v]), a) != a:
                return False
    return True


def naive_chi_s(g):
    return min(len(p) for p in all_partitions(list(g.vertices)) if naive_simple_ok(g, p))


def test_partition_canonical_form():
    p = Partition(((3, 1), (2,), (0,)))
    assert p.blocks == ((0,), (1, 3), (2,))
    assert p.labels() == (0, 1, 2, 1)
    assert Partition.from_labels((5, 5, 2)).blocks == ((0, 1), (2,))
    with pytest.raises(GraphError):
        Partition(((0,), (0, 1))).check(2)


def test_simple_colouring_examples(t3, c3):
    assert is_simple_colouring(t3, Partition(((0, 1), (2,))))
    for p in ([[0, 1], [2]], [[0, 2], [1]], [[1, 2], [0]]):
        assert not is_simple_colouring(c3, Partition(p))
    g = build(2, 1, 4, [("a", 1, 0, 1), ("a", 2, 2, 1), ("e", 1, 0, 3)])
    assert is_simple_colouring(g, Partition(((0,), (1,), (2,), (3,))))
    assert not is_simple_colouring(g, Partition(((0, 1, 2, 3),)))


def test_colouring_examples(t3):
    assert is_colouring(MixedGraph(1, 0, 3), Partition(((0, 1, 2),)))
    assert is_colouring(build(0, 1, 2, [("e", 1, 0, 1)]), Partition(((0,), (1,))))
    assert not is_colouring(t3, Partition(((0, 1), (2,))))


def test_brute_chi_s_examples(t3, c3):
    assert brute_chi_s(t3) == (2, Partition(((0, 1), (2,))))
    assert brute_chi_s(c3)[0] == 3
    assert brute_chi_s(MixedGraph(1, 0, 1))[0] == 1
    assert all(brute_chi_s(t)[0] <= 3 for t in enumerate_tournaments(4))


def test_brute_chi_examples(t3, c3):
    assert brute_chi(build(0, 1, 2, [("e", 1, 0, 1)]))[0] == 2
    assert brute_chi(c3)[0] == 3
    assert brute_chi(t3)[0] == 3


def test_budget():
    with pytest.raises(BudgetExceeded):
        brute_chi_s(MixedGraph(1, 0, 13))
    assert brute_chi_s(MixedGraph(1, 0, 13), budget=13)[0] == 2


@settings(max_examples=120)
@given(mixed_graphs(max_vertices=6))
def test_brute_chi_s_matches_naive_enumeration(g):
    k, p = brute_chi_s(g)
    assert k == naive_chi_s(g)
    assert len(p) == k and is_simple_colouring(g, p)
    assert has_simple_two_colouring(g) == (g.order > 1 and naive_chi_s(g) == 2)


@given(mixed_graphs(max_vertices=6))
def test_iter_simple_colourings_matches_naive(g):
    got = {p.blocks for p in iter_simple_colourings(g)}
    want = {Partition(p).blocks for p in all_partitions(list(g.vertices)) if naive_simple_ok(g, p)}
    assert got == want


@given(mixed_graphs(max_vertices=7))
def test_chi_s_at_most_chi(g):
    if g.size() == 0:
        # chi = 1 but a simple colouring of two or more vertices is non-constant
        assert brute_chi(g)[0] == 1 and brute_chi_s(g)[0] == min(2, g.order)
    else:
        assert brute_chi_s(g)[0] <= brute_chi(g)[0]


def test_find_homomorphism_examples(t3, c3):
    assert find_homomorphism(c3, c3) is not None
    assert find_homomorphism(c3, t3) is None
    # the oracle: none of the 27 maps works
    assert not any(is_homomorphism(c3, t3, VertexMap(3, 3, m)) for m in product(range(3), repeat=3))
    arc = build(1, 0, 2, [("a", 1, 0, 1)])
    phi = find_homomorphism(arc, c3)
    assert is_homomorphism(arc, c3, phi)


def test_find_homomorphism_widens():
    arc = build(1, 0, 2, [("a", 1, 0, 1)])
    target = build(2, 1, 2, [("a", 1, 1, 0)])
    assert find_homomorphism(arc, target).image == (1, 0)


def test_find_simple_homomorphism_examples(t3, c3):
    two = MixedGraph(1, 0, 2)
    assert find_simple_homomorphism(t3, two) is None  # no arcs between the two targets
    phi = find_simple_homomorphism(t3, build(1, 0, 2, [("a", 1, 0, 1)]))
    assert is_simple_homomorphism(t3, build(1, 0, 2, [("a", 1, 0, 1)]), phi)
    assert find_simple_homomorphism(c3, build(1, 0, 2, [("a", 1, 0, 1)])) is None
    assert not is_simple_homomorphism(c3, c3, VertexMap(3, 3, (1, 1, 1)))
    from mixedhom.twotree import random_2tree

    g = random_2tree(8, "oriented", 3)
    assert find_simple_homomorphism(g, c3) is not None


@settings(max_examples=80)
@given(mixed_graphs(max_vertices=6), mixed_graphs(max_vertices=3))
def test_simple_homomorphism_search_is_exhaustive(g, h):
    found = find_simple_homomorphism(g, h)
    oracle = any(
        is_simple_homomorphism(g.widen(max(g.m, h.m), max(g.n, h.n)), h.widen(max(g.m, h.m), max(g.n, h.n)), VertexMap(g.order, h.order, m))
        for m in product(range(h.order), repeat=g.order)
    )
    assert (found is not None) == oracle


@settings(max_examples=60)
@given(mixed_graphs(max_vertices=6), mixed_graphs(max_vertices=3))
def test_homomorphism_search_is_exhaustive(g, h):
    gw, hw = g.widen(max(g.m, h.m), max(g.n, h.n)), h.widen(max(g.m, h.m), max(g.n, h.n))
    found = find_homomorphism(g, h)
    oracle = any(is_homomorphism(gw, hw, VertexMap(g.order, h.order, m)) for m in product(range(h.order), repeat=g.order))
    assert (found is not None) == oracle
    if found:
        assert is_homomorphism(gw, hw, found)


def test_compose():
    i = VertexMap.identity(3)
    assert compose(i, i) == i
    phi = VertexMap(3, 2, (0, 1, 1))
    beta = VertexMap(2, 2, (1, 0))
    assert compose(phi, beta).image == (1, 0, 0)
    with pytest.raises(GraphError):
        compose(beta, phi)


def test_compose_with_constant_fails_validation(t3):
    h = build(1, 0, 2, [("a", 1, 0, 1)])
    phi = find_simple_homomorphism(t3, h, surjective=True)
    beta = VertexMap(2, 2, (0, 0))
    assert not is_simple_homomorphism(t3, h, compose(phi, beta))


def test_enumerate_min_simple_colourings(t3, c3):
    # {a}|{b,c} works too: both cross arcs leave a
    assert enumerate_min_simple_colourings(t3) == [Partition(((0, 1), (2,))), Partition(((0,), (1, 2)))]
    assert enumerate_min_simple_colourings(c3) == [Partition(((0,), (1,), (2,)))]


@settings(max_examples=80)
@given(mixed_graphs(max_vertices=6))
def test_quotient_realises_colouring(g):
    k, p = brute_chi_s(g)
    q, phi = quotient(g, p)
    assert q.order == k and phi.is_surjective()
    if g.order > 1:
        assert is_simple_homomorphism(g, q, phi)


@settings(max_examples=60)
@given(mixed_graphs(max_vertices=6))
def test_betweenness_forces_shared_block(g):
    for p in iter_simple_colourings(g):
        lab = p.labels()
        for u, w in combinations(g.vertices, 2):
            if lab[u] != lab[w]:
                continue
            for v in g.vertices:
                if between(g, u, w, v):
                    assert lab[v] == lab[u]


@settings(max_examples=60)
@given(mixed_graphs(max_vertices=6), mixed_graphs(max_vertices=4, min_vertices=2))
def test_surjection_monotonicity(g, h):
    phi = find_simple_homomorphism(g, h, surjective=True)
    if phi is not None:
        assert brute_chi_s(g)[0] <= brute_chi_s(h)[0]
