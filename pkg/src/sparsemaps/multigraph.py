"""Multigraphs with loops, parallel edges and positional edge ids."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, NamedTuple

import numpy as np

from .errors import InvalidParametersError, InvalidVertexError


class Edge(NamedTuple):
    id: int
    u: int
    v: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


class MultiGraph:
    """Undirected multigraph on vertices ``0..n-1``.

    Edge ids are insertion indices and never change.  Analysis code treats
    a graph as immutable; ``add_edge`` is meant for construction only.
    """

    __slots__ = ("_n", "_u", "_v", "_arrays")

    def __init__(self, n: int):
        if n < 0:
            raise InvalidParametersError(f"vertex count must be >= 0, got {n}")
        self._n = int(n)
        self._u: list[int] = []
        self._v: list[int] = []
        self._arrays = None

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "MultiGraph":
        g = cls(n)
        for u, v in pairs:
            g.add_edge(u, v)
        return g

    @classmethod
    def complete(cls, n: int) -> "MultiGraph":
        return cls.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def ambient(cls, n: int, k: int) -> "MultiGraph":
        """K_n^{k,2k}: ``k`` loops per vertex, every pair at multiplicity ``2k``."""
        return cls.from_edges(n, ambient_complement(cls(n), k))

    def add_edge(self, u: int, v: int) -> int:
        for x in (u, v):
            if not 0 <= x < self._n:
                raise InvalidVertexError(f"vertex {x} out of range for n={self._n}")
        self._u.append(int(u))
        self._v.append(int(v))
        self._arrays = None
        return len(self._u) - 1

    def with_edges(self, pairs: Iterable[tuple[int, int]]) -> "MultiGraph":
        """Copy of this graph with ``pairs`` appended (existing ids unchanged)."""
        g = MultiGraph(self._n)
        g._u = list(self._u)
        g._v = list(self._v)
        for u, v in pairs:
            g.add_edge(u, v)
        return g

    def subgraph(self, edge_ids: Iterable[int]) -> "MultiGraph":
        """Graph on the same vertices keeping only ``edge_ids``, renumbered in order."""
        ids = sorted(set(edge_ids))
        return MultiGraph.from_edges(self._n, ((self._u[e], self._v[e]) for e in ids))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._u)

    @property
    def edges(self) -> list[Edge]:
        return [Edge(i, u, v) for i, (u, v) in enumerate(zip(self._u, self._v))]

    def edge(self, e: int) -> Edge:
        return Edge(e, self._u[e], self._v[e])

    def endpoints(self, e: int) -> tuple[int, int]:
        return self._u[e], self._v[e]

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Endpoint arrays ``(eu, ev)`` as int64, cached until the next edit."""
        if self._arrays is None:
            self._arrays = (np.array(self._u, dtype=np.int64),
                            np.array(self._v, dtype=np.int64))
        return self._arrays

    def multiplicities(self) -> Counter:
        """Counter keyed by sorted endpoint pair; loops keyed ``(v, v)``."""
        return Counter((min(u, v), max(u, v)) for u, v in zip(self._u, self._v))

    def __len__(self) -> int:
        return self.m

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._n == other._n and self._u == other._u and self._v == other._v

    def __hash__(self):
        return hash((self._n, tuple(self._u), tuple(self._v)))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self._n}, edges={list(zip(self._u, self._v))})"


def _check_vertices(g: MultiGraph, vs: Iterable[int]) -> frozenset[int]:
    vs = frozenset(vs)
    for x in vs:
        if not 0 <= x < g.n:
            raise InvalidVertexError(f"vertex {x} out of range for n={g.n}")
    return vs


def spanned_edges(g: MultiGraph, vertices: Iterable[int]) -> frozenset[int]:
    """E(V'): ids of edges with every endpoint in ``vertices``."""
    vs = _check_vertices(g, vertices)
    return frozenset(e for e, (u, v) in enumerate(zip(g._u, g._v)) if u in vs and v in vs)


def vertex_span(g: MultiGraph, edge_ids: Iterable[int]) -> frozenset[int]:
    """V(E'): union of endpoints of ``edge_ids``."""
    span = set()
    for e in edge_ids:
        if not 0 <= e < g.m:
            raise InvalidParametersError(f"edge id {e} out of range for m={g.m}")
        span.add(g._u[e])
        span.add(g._v[e])
    return frozenset(span)


def ambient_complement(g: MultiGraph, k: int) -> list[tuple[int, int]]:
    """Slots of K_n^{k,2k} not used by ``g``, in deterministic order.

    For each vertex ``u`` in ascending order: first its missing loops, then
    the missing copies of ``(u, v)`` for ``v > u`` ascending.  Repeats of a
    slot are adjacent.  Counts clamp at zero when ``g`` exceeds the ambient.
    """
    if k < 1:
        raise InvalidParametersError(f"k must be >= 1, got {k}")
    mult = g.multiplicities()
    slots = []
    for u in range(g.n):
        slots.extend([(u, u)] * max(0, k - mult[(u, u)]))
        for v in range(u + 1, g.n):
            slots.extend([(u, v)] * max(0, 2 * k - mult[(u, v)]))
    return slots


def slot_types(n: int) -> list[tuple[int, int]]:
    """Distinct ambient slot types in ambient order."""
    out = []
    for u in range(n):
        out.append((u, u))
        out.extend((u, v) for v in range(u + 1, n))
    return out
