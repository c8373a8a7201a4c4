"""Decomposing (k, 0)-tight graphs into k edge-disjoint maps.

Two independent routes are provided.  ``decompose_via_matching`` finds a
perfect matching between edges and the ``k`` copies of each vertex;
``decompose_via_orientation`` splits the out-edges of a (k, 0)-pebble-game
orientation.  ``verify_decomposition`` checks either certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels
from .errors import InvalidParametersError, NotTightError
from .multigraph import MultiGraph, vertex_span
from .pebble import run


@dataclass(frozen=True)
class IncidenceBipartite:
    """B_k(G): edges of G on the left, ``k`` copies of each vertex on the right.

    Right vertex ``r`` is copy ``r % k`` of vertex ``r // k``.  Adjacency is
    stored CSR-style with each row ascending.
    """

    k: int
    n_left: int
    n_right: int
    indptr: np.ndarray
    indices: np.ndarray

    def neighbors(self, left: int) -> tuple[int, ...]:
        return tuple(self.indices[self.indptr[left]: self.indptr[left + 1]].tolist())

    def degree(self, left: int) -> int:
        return int(self.indptr[left + 1] - self.indptr[left])

    def right_label(self, r: int) -> tuple[int, int]:
        """``(vertex, copy)`` for right vertex ``r``."""
        return divmod(int(r), self.k)

    def neighborhood(self, lefts: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for e in lefts:
            out.update(self.neighbors(e))
        return frozenset(out)


@dataclass(frozen=True)
class MapDecomposition:
    """Edge ``e`` belongs to map ``map_index[e]`` with tail ``tail[e]``."""

    k: int
    map_index: tuple[int, ...]
    tail: tuple[int, ...]

    def maps(self) -> list[list[int]]:
        parts: list[list[int]] = [[] for _ in range(self.k)]
        for e, i in enumerate(self.map_index):
            parts[i].append(e)
        return parts

    def assignment(self) -> dict[int, tuple[int, int]]:
        return {e: (i, t) for e, (i, t) in enumerate(zip(self.map_index, self.tail))}


def build_incidence_bipartite(g: MultiGraph, k: int) -> IncidenceBipartite:
    if k < 1:
        raise InvalidParametersError(f"k must be >= 1, got {k}")
    indptr = np.zeros(g.m + 1, dtype=np.int64)
    rows = []
    for e, (u, v) in enumerate(zip(*g.arrays())):
        ends = (u,) if u == v else tuple(sorted((int(u), int(v))))
        rows.extend(x * k + i for x in ends for i in range(k))
        indptr[e + 1] = len(rows)
    return IncidenceBipartite(k, g.m, k * g.n, indptr, np.array(rows, dtype=np.int64))


def maximum_bipartite_matching(b: IncidenceBipartite) -> dict[int, int]:
    """Maximum-cardinality matching as ``{left: right}`` (Hopcroft-Karp)."""
    match_l, _ = _matching_arrays(b)
    return {l: int(r) for l, r in enumerate(match_l) if r >= 0}


def _matching_arrays(b: IncidenceBipartite) -> tuple[np.ndarray, np.ndarray]:
    if b.n_left == 0:
        return np.zeros(0, dtype=np.int64), np.full(b.n_right, -1, dtype=np.int64)
    indices = b.indices if b.indices.size else np.zeros(1, dtype=np.int64)
    return _kernels.hopcroft_karp(b.indptr, indices, b.n_left, max(b.n_right, 1))


def hall_violator(b: IncidenceBipartite, match_l: np.ndarray, match_r: np.ndarray) -> frozenset[int]:
    """Left vertices alternating-reachable from the first unmatched one.

    They outnumber their neighborhood by exactly one.
    """
    free = np.flatnonzero(match_l < 0)
    if free.size == 0:
        return frozenset()
    reached = _kernels.alternating_reach(b.indptr, b.indices, match_r, int(free[0]), b.n_left)
    return frozenset(np.flatnonzero(reached).tolist())


def decompose_via_matching(g: MultiGraph, k: int) -> MapDecomposition:
    """k-map decomposition from a perfect matching of B_k(G).

    Raises ``NotTightError``; its witness is the vertex span of a Hall
    violator, or ``None`` when the graph is (k, 0)-sparse with ``m < kn``.
    """
    b = build_incidence_bipartite(g, k)
    match_l, match_r = _matching_arrays(b)
    matched = int((match_l >= 0).sum())
    if matched < g.m:
        witness = vertex_span(g, hall_violator(b, match_l, match_r))
        raise NotTightError(f"B_{k}(G) has no matching saturating all {g.m} edges", witness)
    if g.m != k * g.n:
        raise NotTightError(f"m={g.m} differs from kn={k * g.n}")
    tails, maps = divmod(match_l, k)
    return MapDecomposition(k, tuple(maps.tolist()), tuple(tails.tolist()))


def decompose_via_orientation(g: MultiGraph, k: int) -> MapDecomposition:
    """k-map decomposition from the (k, 0)-pebble-game orientation.

    Each vertex's ``k`` out-edges get map indices ``0..k-1`` by edge id.
    """
    outcome = run(g, k, 0)
    if not outcome.is_tight:
        raise NotTightError(f"graph is {outcome.classification.value} at ({k}, 0)",
                            outcome.witness)
    map_index = [0] * g.m
    seen = [0] * g.n
    for e in range(g.m):
        t = outcome.orientation[e]
        map_index[e] = seen[t]
        seen[t] += 1
    tails = tuple(outcome.orientation[e] for e in range(g.m))
    return MapDecomposition(k, tuple(map_index), tails)


def verify_decomposition(g: MultiGraph, k: int, d: MapDecomposition) -> bool:
    """Every edge in exactly one map, tails are endpoints, out-degree 1 per map."""
    if d.k != k or len(d.map_index) != g.m or len(d.tail) != g.m:
        return False
    counts = np.zeros((k, g.n), dtype=np.int64)
    for e, (i, t) in enumerate(zip(d.map_index, d.tail)):
        if not 0 <= i < k or t not in g.endpoints(e):
            return False
        counts[i, t] += 1
    return bool((counts == 1).all())
