"""Adding edges to sparse graphs to obtain k-maps.

* :func:`predict_any` / :func:`verify_any_exhaustive` - a graph with
  ``kn - l`` edges becomes a k-map after adding *any* ``l`` ambient edges
  exactly when it is (k, l)-tight.
* :func:`augment_some` - a (k, 0)-sparse graph with ``kn - l`` edges can be
  completed to a k-map by *some* ``l`` edges.
* :func:`augment_some_then_any` - a (k, l)-sparse graph with ``kn - l - p``
  edges takes some ``p`` edges to become (k, l)-tight.

Added edges always come from the ambient multigraph K_n^{k,2k}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from .errors import (BudgetExceededError, CountMismatchError, InvalidParametersError,
                     NotSparseError, NotTightError)
from .mapdecomp import MapDecomposition, decompose_via_matching, verify_decomposition
from .multigraph import MultiGraph, ambient_complement
from .pebble import Classification, PebbleState, check_parameters, play, run

DEFAULT_BUDGET = 200_000


@dataclass(frozen=True)
class AugmentationResult:
    added: tuple[tuple[int, int], ...]
    added_ids: tuple[int, ...]
    graph: MultiGraph
    classification: Classification
    decomposition: MapDecomposition | None = None
    any_report: "AnyAdditionReport | None" = None


@dataclass(frozen=True)
class Counterexample:
    added: tuple[tuple[int, int], ...]
    witness: frozenset[int] | None


@dataclass(frozen=True)
class AnyAdditionReport:
    verdict: bool
    checked: int
    counterexample: Counterexample | None = None
    verified: int = 0
    sampled: bool = False


def _require_count(g: MultiGraph, required: int) -> None:
    if g.m != required:
        raise CountMismatchError(f"need m = {required} edges, got {g.m}",
                                 required=required, actual=g.m)


def predict_any(g: MultiGraph, k: int, ell: int) -> bool:
    """Whether adding any ``l`` ambient edges to ``g`` yields a k-map."""
    check_parameters(k, ell)
    _require_count(g, k * g.n - ell)
    return run(g, k, ell).is_tight


def predict_any_within_ambient(g: MultiGraph, k: int, ell: int) -> bool:
    """Exact test for "every ``l``-multiset of ambient slots gives a k-map".

    Equivalent to: ``g`` is (k, 0)-sparse and no set of two or more vertices
    spans more than ``k|V'| - l`` edges.  Single vertices are exempt because
    the ambient never allows more than ``k`` loops, so a vertex already over
    ``k - l`` loops cannot be pushed past ``k``.  This is strictly weaker
    than :func:`predict_any` when ``l >= 1`` and ``g`` has loops.
    """
    check_parameters(k, ell)
    _require_count(g, k * g.n - ell)
    state, outcome = play(g, k, 0)
    if not outcome.is_sparse:
        return False
    return all(state.can_gather(g, a, b, ell)
               for a in range(g.n) for b in range(a + 1, g.n))


def slot_multiplicities(g: MultiGraph, k: int) -> list[tuple[tuple[int, int], int]]:
    """Ambient-complement slot types with how many copies are still free."""
    counts = Counter(ambient_complement(g, k))
    return [(slot, c) for slot, c in counts.items()]


def count_additions(g: MultiGraph, k: int, ell: int) -> int:
    """Number of distinct ``l``-multisets of ambient-complement slots."""
    poly = np.zeros(ell + 1, dtype=object)
    poly[0] = 1
    for _, c in slot_multiplicities(g, k):
        nxt = np.zeros_like(poly)
        for j in range(min(c, ell) + 1):
            nxt[j:] += poly[: ell + 1 - j]
        poly = nxt
    return int(poly[ell])


def iter_additions(g: MultiGraph, k: int, ell: int):
    """Yield each distinct ``l``-multiset of free slots, lexicographically."""
    types = slot_multiplicities(g, k)
    caps = [c for _, c in types]
    for combo in combinations_with_replacement(range(len(types)), ell):
        if all(combo.count(t) <= caps[t] for t in set(combo)):
            yield tuple(types[t][0] for t in combo)


def _check_addition(g: MultiGraph, k: int, added) -> tuple[bool, frozenset[int] | None]:
    h = g.with_edges(added)
    try:
        d = decompose_via_matching(h, k)
    except NotTightError as exc:
        return False, exc.witness
    if not verify_decomposition(h, k, d):
        raise AssertionError(f"matching produced an invalid decomposition for {added}")
    return True, None


def verify_any_exhaustive(g: MultiGraph, k: int, ell: int,
                          limit: int = DEFAULT_BUDGET) -> AnyAdditionReport:
    """Try every ``l``-multiset of ambient-complement slots.

    Each augmented graph is decomposed by bipartite matching and the
    decomposition is re-verified.  The first failing multiset in
    enumeration order is reported as the counterexample.
    """
    check_parameters(k, ell)
    _require_count(g, k * g.n - ell)
    total = count_additions(g, k, ell)
    if total > limit:
        raise BudgetExceededError(
            f"{total} additions exceed the enumeration budget {limit}", count=total, budget=limit)
    checked = verified = 0
    for added in iter_additions(g, k, ell):
        checked += 1
        ok, witness = _check_addition(g, k, added)
        if not ok:
            return AnyAdditionReport(False, checked, Counterexample(added, witness), verified)
        verified += 1
    return AnyAdditionReport(True, checked, None, verified)


def verify_any_sampled(g: MultiGraph, k: int, ell: int, samples: int,
                       seed: int | None = None) -> AnyAdditionReport:
    """Random ``l``-multisets of free slots; a true verdict is only evidence."""
    check_parameters(k, ell)
    _require_count(g, k * g.n - ell)
    rng = np.random.default_rng(seed)
    pool = ambient_complement(g, k)
    if len(pool) < ell:
        return AnyAdditionReport(True, 0, None, 0, sampled=True)
    verified = 0
    for i in range(samples):
        pick = sorted(rng.choice(len(pool), size=ell, replace=False).tolist())
        added = tuple(pool[j] for j in pick)
        ok, witness = _check_addition(g, k, added)
        if not ok:
            return AnyAdditionReport(False, i + 1, Counterexample(added, witness), verified, True)
        verified += 1
    return AnyAdditionReport(True, samples, None, verified, True)


def _greedy_extend(g: MultiGraph, state: PebbleState, k: int, count: int):
    added, ids = [], []
    for _ in range(count):
        for u, v in ambient_complement(g, k):
            if state.can_insert(g, u, v):
                break
        else:
            raise AssertionError("no insertable ambient slot left in a sparse, non-tight graph")
        g = g.with_edges([(u, v)])
        if not state.try_insert(g, g.m - 1):
            raise AssertionError(f"probe accepted ({u}, {v}) but insertion failed")
        added.append((u, v))
        ids.append(g.m - 1)
    return g, tuple(added), tuple(ids)


def augment_some(g: MultiGraph, k: int, ell: int) -> AugmentationResult:
    """Add ``l`` edges to a (k, 0)-sparse graph with ``kn - l`` edges to make a k-map.

    Slots are taken greedily in ambient order, each the first one the
    (k, 0)-pebble game still accepts.
    """
    if k < 1 or ell < 0:
        raise InvalidParametersError(f"need k >= 1 and l >= 0, got k={k}, l={ell}")
    _require_count(g, k * g.n - ell)
    state, outcome = play(g, k, 0)
    if not outcome.is_sparse:
        raise NotSparseError(f"graph is not ({k}, 0)-sparse", outcome.witness)
    h, added, ids = _greedy_extend(g, state, k, ell)
    d = decompose_via_matching(h, k)
    if not verify_decomposition(h, k, d):
        raise AssertionError("decomposition of the augmented graph failed verification")
    return AugmentationResult(added, ids, h, Classification.TIGHT, d)


def augment_some_then_any(g: MultiGraph, k: int, ell: int, p: int,
                          verify_any: bool = False,
                          limit: int = DEFAULT_BUDGET) -> AugmentationResult:
    """Add ``p`` edges to a (k, l)-sparse graph with ``kn - l - p`` edges so it
    becomes (k, l)-tight; optionally verify the any-``l`` property after."""
    if k < 1 or p < 0 or ell < 0 or ell + p > 2 * k - 1:
        raise InvalidParametersError(
            f"need k >= 1, l, p >= 0 and l + p <= 2k - 1, got k={k}, l={ell}, p={p}")
    _require_count(g, k * g.n - ell - p)
    state, outcome = play(g, k, ell)
    if not outcome.is_sparse:
        raise NotSparseError(f"graph is not ({k}, {ell})-sparse", outcome.witness)
    h, added, ids = _greedy_extend(g, state, k, p)
    cls = state.outcome(h).classification
    report = verify_any_exhaustive(h, k, ell, limit) if verify_any else None
    return AugmentationResult(added, ids, h, cls, None, report)
