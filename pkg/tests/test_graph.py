from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from graphlines.errors import Disconnected, InvalidEdge, OrderOutOfRange, VertexOutOfRange
from graphlines.graph import (
    Graph,
    bridge_count,
    bridges,
    build_graph,
    diameter,
    distances,
    iter_bits,
    neighborhood,
    popcount,
    reach,
)

from conftest import complete, cycle, path, random_connected


@st.composite
def connected_graphs(draw, max_n=9):
    n = draw(st.integers(2, max_n))
    parents = [draw(st.integers(0, k - 1)) for k in range(1, n)]
    edges = {(p, k) for k, p in zip(range(1, n), parents)}
    extra = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    return build_graph(n, sorted(edges))


def test_build_rejects_bad_input():
    with pytest.raises(OrderOutOfRange):
        build_graph(1, [])
    with pytest.raises(OrderOutOfRange):
        build_graph(65, [])
    with pytest.raises(InvalidEdge):
        build_graph(3, [(0, 3)])
    with pytest.raises(InvalidEdge):
        build_graph(3, [(1, 1)])
    with pytest.raises(InvalidEdge):
        build_graph(3, [(0, 1), (1, 0)])


def test_build_path():
    g = path(4)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.num_edges == 3
    assert [g.degree(v) for v in range(4)] == [1, 2, 2, 1]


def test_path_distances_and_diameter():
    d = distances(path(4))
    assert d[0, 3] == 3 and d[1, 3] == 2 and d[0, 0] == 0
    assert diameter(d) == 3


def test_small_diameters():
    assert diameter(distances(complete(4))) == 1
    assert diameter(distances(cycle(5))) == 2
    assert diameter(distances(cycle(6))) == 3
    assert diameter(distances(path(10))) == 9


def test_disconnected_rejected():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(Disconnected):
        distances(g)
    with pytest.raises(Disconnected):
        bridges(g)


def test_neighborhood_examples():
    d = distances(path(4))
    assert list(iter_bits(neighborhood(d, 0, 1))) == [1]
    assert list(iter_bits(neighborhood(d, 0, 3))) == [3]
    assert neighborhood(d, 0, 4) == 0
    with pytest.raises(VertexOutOfRange):
        neighborhood(d, 4, 1)
    with pytest.raises(ValueError):
        neighborhood(d, 0, 0)


@settings(max_examples=200, deadline=None)
@given(connected_graphs())
def test_metric_axioms(g):
    d = distances(g)
    n = g.n
    for x in range(n):
        assert d[x, x] == 0
        for y in range(n):
            assert d[x, y] == d[y, x]
            assert (d[x, y] == 1) == g.has_edge(x, y)
            for z in range(n):
                assert d[x, y] <= d[x, z] + d[z, y]


@settings(max_examples=200, deadline=None)
@given(connected_graphs())
def test_neighborhoods_partition_the_rest(g):
    d = distances(g)
    for x in range(g.n):
        rings = [neighborhood(d, x, i) for i in range(1, d.diameter + 1)]
        union = 0
        for r in rings:
            assert union & r == 0
            union |= r
        assert union == g.full ^ (1 << x)


def _bridges_by_removal(g: Graph):
    out = []
    for u, v in g.edges():
        adj = list(g.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        if reach(adj, 0) != g.full:
            out.append((u, v))
    return out


@settings(max_examples=300, deadline=None)
@given(connected_graphs(max_n=12))
def test_bridges_match_edge_removal(g):
    assert bridges(g) == _bridges_by_removal(g)


def test_bridge_examples(rng):
    assert bridge_count(path(4)) == 3
    assert bridge_count(cycle(7)) == 0
    assert bridge_count(complete(5)) == 0
    for n in range(2, 15):
        tree = random_connected(rng, n, p=0.0)
        assert bridge_count(tree) == n - 1


def test_relabel_and_induced():
    g = path(4)
    h = g.relabel([3, 2, 1, 0])
    assert h.edges() == g.edges()
    h = g.relabel([1, 0, 2, 3])
    assert h.edges() == [(0, 2), (0, 1), (2, 3)] or sorted(h.edges()) == [(0, 1), (0, 2), (2, 3)]
    sub = complete(5).induced(0b10110)
    assert sub.n == 3 and sub.num_edges == 3


def test_popcount():
    assert popcount(0) == 0
    assert popcount((1 << 64) - 1) == 64
    for s in combinations(range(10), 4):
        assert popcount(sum(1 << i for i in s)) == 4
