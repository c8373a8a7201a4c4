"""The (k, l)-pebble game for recognizing sparse multigraphs.

Every vertex starts with ``k`` pebbles.  An edge ``uv`` is accepted when
``l + 1`` pebbles can be gathered on its endpoints by reversing directed
paths towards free pebbles; the edge is then oriented away from an endpoint
and one pebble is spent.  The accepted edges form a maximal sparse subgraph
and their orientation keeps ``pebbles(v) + out_degree(v) == k``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels
from .errors import InvalidParametersError, InvalidVertexError, PreconditionError
from .multigraph import MultiGraph, spanned_edges


class Classification(str, enum.Enum):
    TIGHT = "tight"
    SPARSE = "sparse"
    NOT_SPARSE = "not-sparse"

    @property
    def is_sparse(self) -> bool:
        return self is not Classification.NOT_SPARSE


_FROM_CODE = {
    _kernels.TIGHT: Classification.TIGHT,
    _kernels.SPARSE: Classification.SPARSE,
    _kernels.NOT_SPARSE: Classification.NOT_SPARSE,
}


def check_parameters(k: int, ell: int) -> None:
    if int(k) != k or int(ell) != ell:
        raise InvalidParametersError("k and l must be integers")
    if k < 1:
        raise InvalidParametersError(f"k must be >= 1, got {k}")
    if not 0 <= ell <= 2 * k - 1:
        raise InvalidParametersError(f"l must lie in [0, 2k-1] = [0, {2 * k - 1}], got {ell}")


def classify_counts(g: MultiGraph, k: int, ell: int, sparse: bool) -> Classification:
    if not sparse:
        return Classification.NOT_SPARSE
    return Classification.TIGHT if g.m == k * g.n - ell else Classification.SPARSE


def witness_violates(g: MultiGraph, k: int, ell: int, vertices: Iterable[int]) -> bool:
    """True when ``vertices`` spans at least one edge and more than ``k|V'| - l``."""
    vs = frozenset(vertices)
    spanned = len(spanned_edges(g, vs))
    return spanned >= 1 and spanned > k * len(vs) - ell


@dataclass(frozen=True)
class PebbleGameOutcome:
    classification: Classification
    k: int
    ell: int
    orientation: dict[int, int]
    pebble_counts: tuple[int, ...]
    witness: frozenset[int] | None = None
    rejected: tuple[int, ...] = ()

    @property
    def is_tight(self) -> bool:
        return self.classification is Classification.TIGHT

    @property
    def is_sparse(self) -> bool:
        return self.classification.is_sparse


class PebbleState:
    """Mutable pebble-game state over a growing edge set.

    The state follows a graph by edge id.  Graphs passed to successive calls
    must extend each other (same ``n``, earlier edge ids unchanged), which is
    what ``MultiGraph.with_edges`` produces.
    """

    def __init__(self, n: int, k: int, ell: int):
        check_parameters(k, ell)
        self.n = n
        self.k = k
        self.ell = ell
        self._pebbles = np.full(n, k, dtype=np.int64)
        self._out = np.full((n, k), -1, dtype=np.int64)
        self._outdeg = np.zeros(n, dtype=np.int64)
        self._tail = np.full(0, -1, dtype=np.int64)
        self._status = np.zeros(0, dtype=np.int8)  # 0 pending, 1 accepted, 2 rejected
        self._witness = np.zeros(max(n, 1), dtype=np.bool_)

    def _fit(self, g: MultiGraph) -> tuple[np.ndarray, np.ndarray]:
        if g.n != self.n:
            raise InvalidParametersError(f"graph has n={g.n}, state has n={self.n}")
        grow = g.m - self._tail.shape[0]
        if grow > 0:
            self._tail = np.concatenate([self._tail, np.full(grow, -1, dtype=np.int64)])
            self._status = np.concatenate([self._status, np.zeros(grow, dtype=np.int8)])
        eu, ev = g.arrays()
        if g.m == 0:
            # kernels index eu/ev only through accepted edges; keep a valid buffer
            eu = ev = np.zeros(1, dtype=np.int64)
        return eu, ev

    def _check_vertex(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise InvalidVertexError(f"vertex {x} out of range for n={self.n}")

    def try_insert(self, g: MultiGraph, e: int) -> bool:
        """Process edge ``e`` of ``g``; accept and orient it if possible."""
        eu, ev = self._fit(g)
        if self._status[e] != 0:
            raise PreconditionError(f"edge {e} was already processed")
        u, v = g.endpoints(e)
        ok = _kernels.pebble_insert(eu, ev, self._tail, self._out, self._outdeg,
                                    self._pebbles, self.k, self.ell, u, v, e,
                                    True, self._witness)
        self._status[e] = 1 if ok else 2
        return bool(ok)

    def can_insert(self, g: MultiGraph, u: int, v: int) -> bool:
        """Would a new edge ``uv`` be accepted?  The state is left untouched."""
        self._check_vertex(u)
        self._check_vertex(v)
        eu, ev = self._fit(g)
        return bool(_kernels.pebble_insert(eu, ev, self._tail, self._out, self._outdeg,
                                           self._pebbles, self.k, self.ell, u, v, -1,
                                           False, self._witness))

    def can_gather(self, g: MultiGraph, u: int, v: int, count: int) -> bool:
        """Could ``count`` pebbles be brought onto ``{u, v}``?  Read-only probe.

        For ``u != v`` this holds iff every vertex set containing both spans at
        most ``k|V'| - count`` accepted edges (for ``count <= 2k``).
        """
        self._check_vertex(u)
        self._check_vertex(v)
        if count <= 0:
            return True
        eu, ev = self._fit(g)
        return bool(_kernels.pebble_insert(eu, ev, self._tail, self._out, self._outdeg,
                                           self._pebbles, self.k, count - 1, u, v, -1,
                                           False, self._witness))

    def violation_witness(self, g: MultiGraph, u: int, v: int) -> frozenset[int]:
        """Vertex set that would span too many edges together with ``uv``.

        This is the set reachable from ``{u, v}`` along the orientation at the
        point where pebble collection fails.
        """
        self._check_vertex(u)
        self._check_vertex(v)
        eu, ev = self._fit(g)
        ok = _kernels.pebble_insert(eu, ev, self._tail, self._out, self._outdeg,
                                    self._pebbles, self.k, self.ell, u, v, -1,
                                    False, self._witness)
        if ok:
            raise PreconditionError(f"edge ({u}, {v}) can be inserted; no violation")
        return frozenset(np.flatnonzero(self._witness[: self.n]).tolist())

    def play(self, g: MultiGraph) -> PebbleGameOutcome:
        """Insert every pending edge of ``g`` in id order and summarize."""
        self._fit(g)
        witness = None
        for e in range(g.m):
            if self._status[e] != 0:
                continue
            if not self.try_insert(g, e) and witness is None:
                witness = frozenset(np.flatnonzero(self._witness[: self.n]).tolist())
        return self.outcome(g, witness)

    def outcome(self, g: MultiGraph, witness: frozenset[int] | None = None) -> PebbleGameOutcome:
        rejected = tuple(np.flatnonzero(self._status[: g.m] == 2).tolist())
        if rejected and witness is None:
            u, v = g.endpoints(rejected[0])
            witness = self.violation_witness(g, u, v)
        cls = classify_counts(g, self.k, self.ell, not rejected)
        return PebbleGameOutcome(
            classification=cls,
            k=self.k,
            ell=self.ell,
            orientation=self.orientation,
            pebble_counts=self.pebbles,
            witness=witness if rejected else None,
            rejected=rejected,
        )

    @property
    def pebbles(self) -> tuple[int, ...]:
        return tuple(self._pebbles.tolist())

    @property
    def total_pebbles(self) -> int:
        return int(self._pebbles.sum())

    @property
    def orientation(self) -> dict[int, int]:
        acc = np.flatnonzero(self._status == 1)
        return {int(e): int(self._tail[e]) for e in acc}

    @property
    def accepted(self) -> frozenset[int]:
        return frozenset(np.flatnonzero(self._status == 1).tolist())

    @property
    def rejected(self) -> frozenset[int]:
        return frozenset(np.flatnonzero(self._status == 2).tolist())

    def out_degree(self, v: int) -> int:
        return int(self._outdeg[v])

    def out_edges(self, v: int) -> tuple[int, ...]:
        return tuple(self._out[v, : self._outdeg[v]].tolist())


def run(g: MultiGraph, k: int, ell: int) -> PebbleGameOutcome:
    """Run the (k, l)-pebble game on ``g`` inserting edges in id order."""
    return PebbleState(g.n, k, ell).play(g)


def play(g: MultiGraph, k: int, ell: int) -> tuple[PebbleState, PebbleGameOutcome]:
    """Like :func:`run` but also hands back the final state for further probes."""
    state = PebbleState(g.n, k, ell)
    return state, state.play(g)


def classify_batch(eus: np.ndarray, evs: np.ndarray, ms: np.ndarray, n: int,
                   k: int, ell: int) -> np.ndarray:
    """Classification codes for a batch of edge arrays (see ``corpus``)."""
    check_parameters(k, ell)
    return _kernels.pebble_classify_batch(eus, evs, ms, n, k, ell)


def decode(code: int) -> Classification:
    return _FROM_CODE[int(code)]
