import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sparsemaps import NotTightError
from sparsemaps.corpus import ambient_multigraphs, random_multigraph
from sparsemaps.mapdecomp import (MapDecomposition, build_incidence_bipartite,
                                  decompose_via_matching, decompose_via_orientation,
                                  maximum_bipartite_matching, verify_decomposition)
from sparsemaps.multigraph import MultiGraph, vertex_span
from sparsemaps.oracle import kmap_bruteforce, sparse_bruteforce
from sparsemaps.pebble import run, witness_violates


def test_b1_k3(triangle):
    b = build_incidence_bipartite(triangle, 1)
    assert (b.n_left, b.n_right) == (3, 3)
    assert all(b.degree(e) == 2 for e in range(3))
    assert b.neighbors(0) == (0, 1)


def test_single_loop_k2():
    b = build_incidence_bipartite(MultiGraph.from_edges(1, [(0, 0)]), 2)
    assert (b.n_left, b.n_right, b.degree(0)) == (1, 2, 2)
    assert b.right_label(1) == (0, 1)


def test_b2_k4(k4):
    b = build_incidence_bipartite(k4, 2)
    assert (b.n_left, b.n_right) == (6, 8)
    assert all(b.degree(e) == 4 for e in range(6))


def test_matching_b1_k3_is_perfect(triangle):
    assert len(maximum_bipartite_matching(build_incidence_bipartite(triangle, 1))) == 3


def test_isolated_left_vertex_unmatched():
    # a loop at vertex 0 twice with k=1: only one copy of vertex 0 to go around
    g = MultiGraph.from_edges(2, [(0, 0), (0, 0)])
    matching = maximum_bipartite_matching(build_incidence_bipartite(g, 1))
    assert len(matching) == 1 and 1 not in matching


def test_matching_b2_k4_doubled(k4_doubled):
    assert kmap_bruteforce(k4_doubled, 2)[0]
    assert len(maximum_bipartite_matching(build_incidence_bipartite(k4_doubled, 2))) == 8


def test_decompose_k3_cyclic(triangle):
    for method in (decompose_via_matching, decompose_via_orientation):
        d = method(triangle, 1)
        assert d.map_index == (0, 0, 0)
        assert sorted(d.tail) == [0, 1, 2]
        assert verify_decomposition(triangle, 1, d)


def test_decompose_k4_doubled(k4_doubled):
    for method in (decompose_via_matching, decompose_via_orientation):
        d = method(k4_doubled, 2)
        assert verify_decomposition(k4_doubled, 2, d)
        assert [len(m) for m in d.maps()] == [4, 4]


def test_k4_not_tight_at_k2(k4):
    with pytest.raises(NotTightError) as info:
        decompose_via_matching(k4, 2)
    assert info.value.witness is None
    with pytest.raises(NotTightError):
        decompose_via_orientation(k4, 2)


def test_tripled_triangle_edge_not_tight():
    g = MultiGraph.complete(3).with_edges([(0, 1), (0, 1)])
    with pytest.raises(NotTightError) as info:
        decompose_via_matching(g, 1)
    assert witness_violates(g, 1, 0, info.value.witness)


def test_k_loops_each_own_map():
    for k in (1, 2, 3):
        g = MultiGraph.from_edges(1, [(0, 0)] * k)
        d = decompose_via_orientation(g, k)
        assert d.map_index == tuple(range(k))
        assert verify_decomposition(g, k, decompose_via_matching(g, k))


def test_path_not_tight():
    with pytest.raises(NotTightError):
        decompose_via_orientation(MultiGraph.from_edges(3, [(0, 1), (1, 2)]), 1)


def test_verify_rejects_broken(triangle):
    d = decompose_via_matching(triangle, 1)
    tails = list(d.tail)
    tails[0] = triangle.endpoints(0)[0] if tails[0] != triangle.endpoints(0)[0] \
        else triangle.endpoints(0)[1]
    assert not verify_decomposition(triangle, 1, MapDecomposition(1, d.map_index, tuple(tails)))
    assert not verify_decomposition(triangle, 1, MapDecomposition(1, d.map_index[:2], d.tail[:2]))
    assert not verify_decomposition(triangle, 1, MapDecomposition(1, (0, 0, 1), d.tail))
    assert not verify_decomposition(triangle, 2, d)


def test_hall_condition_neighborhood_sizes():
    rng = np.random.default_rng(3)
    for _ in range(50):
        g = random_multigraph(5, 8, rng)
        for k in (1, 2, 3):
            b = build_incidence_bipartite(g, k)
            for size in range(0, 4):
                for sub in itertools.combinations(range(g.m), size):
                    assert len(b.neighborhood(sub)) == k * len(vertex_span(g, sub))


@pytest.mark.parametrize("k,n", [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3)])
def test_four_routes_agree(k, n):
    for g in ambient_multigraphs(n, k * n, k).graphs():
        routes = []
        for method in (decompose_via_matching, decompose_via_orientation):
            try:
                d = method(g, k)
            except NotTightError as exc:
                assert exc.witness is not None and witness_violates(g, k, 0, exc.witness)
                routes.append(False)
            else:
                assert verify_decomposition(g, k, d)
                routes.append(True)
        routes.append(kmap_bruteforce(g, k)[0])
        routes.append(run(g, k, 0).is_tight)
        assert len(set(routes)) == 1, (g, routes)


graphs = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                       min_size=0, max_size=12).map(lambda es: MultiGraph.from_edges(n, es)))


@settings(max_examples=200, deadline=None)
@given(graphs, st.integers(1, 3))
def test_matching_size_tracks_sparsity(g, k):
    size = len(maximum_bipartite_matching(build_incidence_bipartite(g, k)))
    assert (size == g.m) == sparse_bruteforce(g, k, 0).classification.is_sparse
