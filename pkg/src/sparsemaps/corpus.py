"""Graph corpora for exhaustive and randomized cross-checks.

Exhaustive corpora are produced as edge-array batches (one row per graph)
so the batch kernels can sweep hundreds of thousands of graphs at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

import numpy as np

from .multigraph import MultiGraph, ambient_complement, slot_types
from .pebble import PebbleState


@dataclass(frozen=True)
class Batch:
    """All graphs here share ``n`` and the edge count ``m``."""

    n: int
    m: int
    eus: np.ndarray
    evs: np.ndarray

    @property
    def ms(self) -> np.ndarray:
        return np.full(len(self), self.m, dtype=np.int64)

    def __len__(self) -> int:
        return self.eus.shape[0]

    def graph(self, i: int) -> MultiGraph:
        return MultiGraph.from_edges(self.n, zip(self.eus[i].tolist(), self.evs[i].tolist()))

    def graphs(self) -> Iterator[MultiGraph]:
        for i in range(len(self)):
            yield self.graph(i)


def multigraphs(n: int, m: int, max_loops: int | None = None,
                max_mult: int | None = None) -> Batch:
    """Every multigraph on ``n`` labelled vertices with ``m`` edges.

    Edges are listed in ambient slot order.  ``max_loops`` caps loops per
    vertex and ``max_mult`` caps parallel copies of a pair.
    """
    types = slot_types(n)
    if m < 0:
        empty = np.zeros((0, 0), dtype=np.int64)
        return Batch(n, 0, empty, empty.copy())
    if not types:
        empty = np.zeros((1 if m == 0 else 0, m), dtype=np.int64)
        return Batch(n, m, empty, empty.copy())
    if m == 0:
        rows = np.zeros((1, 0), dtype=np.int64)
    else:
        rows = np.array(list(combinations_with_replacement(range(len(types)), m)),
                        dtype=np.int64)
    tu = np.array([u for u, _ in types], dtype=np.int64)
    tv = np.array([v for _, v in types], dtype=np.int64)
    if (max_loops is not None or max_mult is not None) and m:
        keep = np.ones(rows.shape[0], dtype=bool)
        for t, (u, v) in enumerate(types):
            cap = max_loops if u == v else max_mult
            if cap is not None:
                keep &= (rows == t).sum(axis=1) <= cap
        rows = rows[keep]
    return Batch(n, m, tu[rows], tv[rows])


def ambient_multigraphs(n: int, m: int, k: int) -> Batch:
    """Every ``m``-edge subgraph (up to edge multiplicity) of K_n^{k,2k}."""
    return multigraphs(n, m, max_loops=k, max_mult=2 * k)


def random_multigraph(n: int, m: int, rng: np.random.Generator,
                      loop_weight: float = 1.0) -> MultiGraph:
    """``m`` edges drawn independently over the slot types of ``n`` vertices."""
    types = slot_types(n)
    w = np.array([loop_weight if u == v else 1.0 for u, v in types])
    picks = rng.choice(len(types), size=m, p=w / w.sum())
    return MultiGraph.from_edges(n, (types[t] for t in picks))


def random_sparse(n: int, k: int, ell: int, m: int,
                  rng: np.random.Generator) -> MultiGraph | None:
    """Random (k, l)-sparse graph with ``m`` edges, or None if ``m`` is too big.

    Ambient slots are shuffled and kept whenever the pebble game accepts
    them; since sparse edge sets form a matroid the result reaches any
    ``m`` up to ``kn - l``.
    """
    if m > max(k * n - ell, 0):
        return None
    slots = ambient_complement(MultiGraph(n), k)
    order = rng.permutation(len(slots))
    g = MultiGraph(n)
    state = PebbleState(n, k, ell)
    for i in order:
        if g.m == m:
            break
        u, v = slots[i]
        if state.can_insert(g, u, v):
            g.add_edge(u, v)
            state.try_insert(g, g.m - 1)
    return g if g.m == m else None


def shuffled(g: MultiGraph, rng: np.random.Generator) -> MultiGraph:
    """Same graph with edges in a random order (new ids)."""
    edges = [g.endpoints(e) for e in rng.permutation(g.m)]
    return MultiGraph.from_edges(g.n, edges)
