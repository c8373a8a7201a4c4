import itertools

import numpy as np
import pytest

from sparsemaps import CountMismatchError, InvalidParametersError, NotTightError
from sparsemaps.corpus import random_multigraph, random_sparse
from sparsemaps.matroid import (BicycleOracle, GraphicOracle, TreesAndMapsPartition,
                                UnionBicycleOracle, bicycle_independent,
                                decompose_trees_and_maps, graphic_independent,
                                matroid_union_partition, truncation_independent,
                                union_bicycle_independent, verify_trees_and_maps)
from sparsemaps.multigraph import MultiGraph
from sparsemaps.oracle import union_partition_bruteforce
from sparsemaps.pebble import run, witness_violates


def test_graphic_examples(triangle, k4):
    assert graphic_independent(triangle, [0, 1])
    assert not graphic_independent(triangle, [0, 1, 2])
    assert not graphic_independent(MultiGraph.from_edges(1, [(0, 0)]), [0])
    assert graphic_independent(k4, [])


def test_bicycle_examples(triangle):
    assert bicycle_independent(triangle, [0, 1, 2])
    assert bicycle_independent(MultiGraph.from_edges(1, [(0, 0)]), [0])
    assert not bicycle_independent(MultiGraph.from_edges(1, [(0, 0), (0, 0)]), [0, 1])
    theta = MultiGraph.from_edges(2, [(0, 1)] * 3)
    assert bicycle_independent(theta, [0, 1])
    assert not bicycle_independent(theta, [0, 1, 2])
    # two cycles in separate components are fine until they get joined
    g = MultiGraph.from_edges(4, [(0, 0), (1, 1), (0, 1), (2, 3)])
    assert bicycle_independent(g, [0, 1])
    assert not bicycle_independent(g, [0, 1, 2])
    assert bicycle_independent(g, [0, 3])


def test_union_and_truncation(k4, k4_doubled):
    assert union_bicycle_independent(k4, 2, range(6))
    assert union_bicycle_independent(k4_doubled, 2, range(8))
    g = MultiGraph.from_edges(2, [(0, 1)] * 5)
    assert not union_bicycle_independent(g, 2, range(5))
    assert truncation_independent(k4, 2, 2, range(6))
    assert not truncation_independent(k4_doubled, 2, 2, range(8))
    assert truncation_independent(k4_doubled, 2, 2, range(6))


def test_small_oracles_match_definitions():
    rng = np.random.default_rng(11)
    for _ in range(40):
        g = random_multigraph(5, 7, rng, loop_weight=0.2)
        for r in range(g.m + 1):
            for sub in itertools.combinations(range(g.m), r):
                h = g.subgraph(sub)
                # graphic = forest, bicycle = (1,0)-sparse
                assert graphic_independent(g, sub) == run(h, 1, 1).is_sparse
                assert bicycle_independent(g, sub) == run(h, 1, 0).is_sparse


def test_k4_two_spanning_trees(k4):
    res = matroid_union_partition(range(6), [GraphicOracle(k4), GraphicOracle(k4)])
    assert res.covered == 6 and not res.uncovered
    assert all(len(p) == 3 and graphic_independent(k4, p) for p in res.parts)


def test_union_coverage_matches_bruteforce():
    rng = np.random.default_rng(5)
    for _ in range(60):
        n = int(rng.integers(2, 5))
        g = random_multigraph(n, int(rng.integers(1, 9)), rng, loop_weight=0.3)
        kinds = [GraphicOracle, BicycleOracle]
        oracles = [kinds[int(rng.integers(2))](g) for _ in range(int(rng.integers(1, 3)))]
        res = matroid_union_partition(range(g.m), oracles)
        for part, oracle in zip(res.parts, oracles):
            assert oracle(part)
        assert res.covered == union_partition_bruteforce(g, range(g.m), oracles)


def test_union_bicycle_equals_bruteforce_partition():
    rng = np.random.default_rng(9)
    for _ in range(60):
        g = random_multigraph(4, int(rng.integers(1, 9)), rng, loop_weight=0.3)
        k = int(rng.integers(1, 3))
        full = union_partition_bruteforce(g, range(g.m), [BicycleOracle(g)] * k) == g.m
        assert UnionBicycleOracle(g, k)(range(g.m)) == full


def test_trees_and_maps_k4(k4):
    p = decompose_trees_and_maps(k4, 2, 2)
    assert p.n_trees == 2 and len(p.maps) == 0
    assert verify_trees_and_maps(k4, p)


def test_trees_and_maps_mixed(k4_doubled):
    g = k4_doubled.subgraph(range(7))  # K_4 plus one parallel 0-1
    p = decompose_trees_and_maps(g, 2, 1)
    assert len(p.trees) == 1 and len(p.maps) == 1
    assert len(p.trees[0]) == 3 and len(p.maps[0]) == 4
    assert verify_trees_and_maps(g, p)


def test_trees_and_maps_all_maps(k4_doubled):
    p = decompose_trees_and_maps(k4_doubled, 2, 0)
    assert p.n_trees == 0 and verify_trees_and_maps(k4_doubled, p)


def test_trees_and_maps_errors(k4, triangle):
    with pytest.raises(InvalidParametersError):
        decompose_trees_and_maps(k4, 1, 2)
    with pytest.raises(CountMismatchError):
        decompose_trees_and_maps(triangle, 2, 2)
    # right count, wrong structure: four parallel 0-1 edges
    g = MultiGraph.from_edges(4, [(0, 1)] * 4 + [(1, 2), (0, 2), (2, 3)])
    with pytest.raises(NotTightError) as info:
        decompose_trees_and_maps(g, 2, 1)
    assert witness_violates(g, 2, 1, info.value.witness)


def test_verify_trees_and_maps_rejects(k4):
    assert not verify_trees_and_maps(k4, TreesAndMapsPartition(((0, 1, 2), (3, 4, 5)), 2))
    assert not verify_trees_and_maps(k4, TreesAndMapsPartition(((0, 2, 5), (1, 3)), 2))


@pytest.mark.parametrize("seed", range(4))
def test_random_tight_graphs(seed):
    rng = np.random.default_rng(100 + seed)
    done = 0
    while done < 25:
        k = int(rng.integers(1, 4))
        ell = int(rng.integers(0, k + 1))
        n = int(rng.integers(2, 9))
        g = random_sparse(n, k, ell, k * n - ell, rng)
        if g is None:
            continue
        p = decompose_trees_and_maps(g, k, ell)
        assert verify_trees_and_maps(g, p)
        done += 1
