"""Independence oracles and matroid-union partitioning.

The oracles cover the graphic matroid, the bicycle matroid (edge sets with
at most one cycle per component), the k-fold union of the bicycle matroid
((k, 0)-sparsity) and its truncation at rank ``kn - l``.  The partitioner
realizes a decomposition into ``l`` spanning trees and ``k - l`` spanning
maps for (k, l)-tight graphs with ``l <= k``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .errors import (CountMismatchError, InvalidParametersError, NotTightError,
                     OracleViolationError, SparsityError)
from .multigraph import MultiGraph
from .pebble import run

Oracle = Callable[[frozenset[int]], bool]


class IndependenceOracle:
    """Predicate on edge-id subsets of a fixed graph."""

    name = "oracle"

    def __init__(self, g: MultiGraph):
        self.g = g

    def __call__(self, edge_ids: Iterable[int]) -> bool:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.g.n}, m={self.g.m})"


class GraphicOracle(IndependenceOracle):
    name = "graphic"

    def __call__(self, edge_ids):
        ds = DisjointSet(range(self.g.n))
        for e in edge_ids:
            if not ds.merge(*self.g.endpoints(e)):
                return False
        return True


class BicycleOracle(IndependenceOracle):
    name = "bicycle"

    def __call__(self, edge_ids):
        ds = DisjointSet(range(self.g.n))
        # surplus = edges - vertices + 1 per component; a second cycle makes it 2
        cycles: dict[int, int] = {}
        for e in edge_ids:
            u, v = self.g.endpoints(e)
            ru, rv = ds[u], ds[v]
            if ru == rv:
                c = cycles.get(ru, 0) + 1
                if c > 1:
                    return False
                cycles[ru] = c
            else:
                c = cycles.pop(ru, 0) + cycles.pop(rv, 0)
                if c > 1:
                    return False
                ds.merge(u, v)
                if c:
                    cycles[ds[u]] = c
        return True


class UnionBicycleOracle(IndependenceOracle):
    """Independent in the k-fold bicycle union iff (k, 0)-sparse."""

    name = "bicycle-union"

    def __init__(self, g: MultiGraph, k: int):
        super().__init__(g)
        self.k = k

    def __call__(self, edge_ids):
        return run(self.g.subgraph(edge_ids), self.k, 0).is_sparse


class TruncationOracle(UnionBicycleOracle):
    name = "truncation"

    def __init__(self, g: MultiGraph, k: int, ell: int):
        super().__init__(g, k)
        if not 0 <= ell <= 2 * k - 1:
            raise InvalidParametersError(f"l must lie in [0, {2 * k - 1}], got {ell}")
        self.ell = ell

    def __call__(self, edge_ids):
        ids = frozenset(edge_ids)
        return len(ids) <= self.k * self.g.n - self.ell and super().__call__(ids)


def graphic_independent(g: MultiGraph, edge_ids: Iterable[int]) -> bool:
    return GraphicOracle(g)(edge_ids)


def bicycle_independent(g: MultiGraph, edge_ids: Iterable[int]) -> bool:
    return BicycleOracle(g)(edge_ids)


def union_bicycle_independent(g: MultiGraph, k: int, edge_ids: Iterable[int]) -> bool:
    return UnionBicycleOracle(g, k)(edge_ids)


def truncation_independent(g: MultiGraph, k: int, ell: int, edge_ids: Iterable[int]) -> bool:
    return TruncationOracle(g, k, ell)(edge_ids)


@dataclass(frozen=True)
class UnionPartition:
    parts: tuple[frozenset[int], ...]
    uncovered: tuple[int, ...]

    @property
    def covered(self) -> int:
        return sum(len(p) for p in self.parts)


def matroid_union_partition(ground: Iterable[int], oracles: Sequence[Oracle]) -> UnionPartition:
    """Disjoint parts, part ``i`` independent for ``oracles[i]``, covering
    as many ground elements as possible.

    Elements are inserted in ascending order.  Each insertion searches the
    exchange graph breadth-first for a shortest chain of single swaps that
    ends at a part with room, which keeps every part independent.
    """
    ground = sorted(set(ground))
    cache: dict[tuple[int, frozenset[int]], bool] = {}

    def indep(i: int, s: frozenset[int]) -> bool:
        key = (id(oracles[i]), s)
        if key not in cache:
            cache[key] = bool(oracles[i](s))
        return cache[key]

    for i in range(len(oracles)):
        if not indep(i, frozenset()):
            raise OracleViolationError(f"oracle {i} rejects the empty set")

    parts = [frozenset() for _ in oracles]
    where: dict[int, int] = {}
    uncovered = []
    for x in ground:
        pred: dict[int, tuple[int, int] | None] = {x: None}
        queue = deque([x])
        sink = None
        while queue and sink is None:
            y = queue.popleft()
            for i, part in enumerate(parts):
                if where.get(y) != i and indep(i, part | {y}):
                    sink = (y, i)
                    break
            if sink is not None:
                break
            for i, part in enumerate(parts):
                if where.get(y) == i:
                    continue
                for z in sorted(part):
                    if z not in pred and indep(i, (part - {z}) | {y}):
                        pred[z] = (y, i)
                        queue.append(z)
        if sink is None:
            uncovered.append(x)
            continue
        adds: list[set[int]] = [set() for _ in parts]
        drops: list[set[int]] = [set() for _ in parts]
        y, j = sink
        adds[j].add(y)
        while pred[y] is not None:
            prev, i = pred[y]
            drops[i].add(y)
            adds[i].add(prev)
            y = prev
        for i in range(len(parts)):
            if adds[i] or drops[i]:
                parts[i] = (parts[i] - drops[i]) | adds[i]
                if not indep(i, parts[i]):
                    raise OracleViolationError(
                        f"part {i} became dependent after an exchange; oracle is not a matroid")
                for z in adds[i]:
                    where[z] = i
    return UnionPartition(tuple(parts), tuple(uncovered))


@dataclass(frozen=True)
class TreesAndMapsPartition:
    """First ``n_trees`` parts are spanning trees, the rest spanning maps."""

    parts: tuple[tuple[int, ...], ...]
    n_trees: int

    @property
    def trees(self) -> tuple[tuple[int, ...], ...]:
        return self.parts[: self.n_trees]

    @property
    def maps(self) -> tuple[tuple[int, ...], ...]:
        return self.parts[self.n_trees:]


def verify_trees_and_maps(g: MultiGraph, p: TreesAndMapsPartition) -> bool:
    """Parts cover E disjointly; trees are acyclic with n-1 edges, maps are
    (1, 0)-sparse with n edges.  Both counts force spanning-ness."""
    flat = [e for part in p.parts for e in part]
    if sorted(flat) != list(range(g.m)):
        return False
    for part in p.trees:
        if len(part) != g.n - 1 or not graphic_independent(g, part):
            return False
    for part in p.maps:
        if len(part) != g.n or not bicycle_independent(g, part):
            return False
    return True


def decompose_trees_and_maps(g: MultiGraph, k: int, ell: int) -> TreesAndMapsPartition:
    """Split a (k, l)-tight graph, ``0 <= l <= k``, into ``l`` spanning trees
    and ``k - l`` spanning maps."""
    if k < 1 or not 0 <= ell <= k:
        raise InvalidParametersError(f"need k >= 1 and 0 <= l <= k, got k={k}, l={ell}")
    if g.m != k * g.n - ell:
        raise CountMismatchError(f"need m = kn - l = {k * g.n - ell}, got {g.m}",
                                 required=k * g.n - ell, actual=g.m)
    outcome = run(g, k, ell)
    if not outcome.is_tight:
        raise NotTightError(f"graph is {outcome.classification.value} at ({k}, {ell})",
                            outcome.witness)
    oracles = [GraphicOracle(g)] * ell + [BicycleOracle(g)] * (k - ell)
    result = matroid_union_partition(range(g.m), oracles)
    if result.uncovered:
        raise SparsityError(f"edges {list(result.uncovered)} left uncovered by a tight graph")
    return TreesAndMapsPartition(tuple(tuple(sorted(p)) for p in result.parts), ell)
