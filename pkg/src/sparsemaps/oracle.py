"""Exponential reference implementations used as ground truth.

Nothing here calls the pebble game, the matching code or the matroid-union
partitioner; these are the independent routes the fast paths are checked
against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import BudgetExceededError
from .multigraph import MultiGraph
from .pebble import Classification, check_parameters


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 12
    max_edges: int = 16
    max_ground: int = 10


DEFAULT_BUDGET = OracleBudget()


@dataclass(frozen=True)
class BruteForceResult:
    classification: Classification
    witness: frozenset[int] | None = None


@lru_cache(maxsize=None)
def subset_masks(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nonempty vertex subsets of ``range(n)`` as bitmasks.

    Ordered by size, then lexicographically, so the first hit is a smallest
    violating set.
    """
    masks, sizes = [], []
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            masks.append(sum(1 << v for v in combo))
            sizes.append(size)
    return np.array(masks, dtype=np.int64), np.array(sizes, dtype=np.int64)


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(v for v in range(mask.bit_length()) if mask >> v & 1)


def sparse_bruteforce(g: MultiGraph, k: int, ell: int,
                      budget: OracleBudget = DEFAULT_BUDGET) -> BruteForceResult:
    """Classify ``g`` by checking every vertex subset that spans an edge."""
    check_parameters(k, ell)
    if g.n > budget.max_vertices:
        raise BudgetExceededError(
            f"subset enumeration over n={g.n} exceeds max_vertices={budget.max_vertices}",
            count=2 ** g.n, budget=2 ** budget.max_vertices)
    masks, sizes = subset_masks(g.n)
    eu, ev = g.arrays()
    hit = _kernels.first_violating_subset(eu, ev, g.m, masks, sizes, k, ell) if g.m else -1
    if hit >= 0:
        return BruteForceResult(Classification.NOT_SPARSE, _mask_to_set(int(masks[hit])))
    if g.m == k * g.n - ell:
        return BruteForceResult(Classification.TIGHT)
    return BruteForceResult(Classification.SPARSE)


def sparse_bruteforce_batch(eus, evs, ms, n: int, k: int, ell: int) -> np.ndarray:
    """Vectorized :func:`sparse_bruteforce` returning kernel classification codes."""
    check_parameters(k, ell)
    masks, sizes = subset_masks(n)
    return _kernels.bruteforce_classify_batch(eus, evs, ms, n, k, ell, masks, sizes)


def kmap_bruteforce(g: MultiGraph, k: int,
                    budget: OracleBudget = DEFAULT_BUDGET) -> tuple[bool, dict[int, int] | None]:
    """Search all orientations for one with every out-degree exactly ``k``.

    Returns ``(found, tails)`` where ``tails`` maps edge id to tail vertex.
    """
    if g.m != k * g.n:
        return False, None
    if g.m > budget.max_edges:
        raise BudgetExceededError(
            f"orientation search over m={g.m} exceeds max_edges={budget.max_edges}",
            count=2 ** g.m, budget=2 ** budget.max_edges)
    eu, ev = g.arrays()
    tails = np.empty(max(g.m, 1), dtype=np.int64)
    if _kernels.orient_exact(eu, ev, g.m, g.n, k, tails):
        return True, {e: int(tails[e]) for e in range(g.m)}
    return False, None


def kmap_bruteforce_batch(eus, evs, ms, n: int, k: int) -> np.ndarray:
    return _kernels.orient_exact_batch(eus, evs, ms, n, k)


def union_partition_bruteforce(g: MultiGraph, edge_ids: Iterable[int],
                               oracles: Sequence[Callable[[frozenset[int]], bool]],
                               budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Largest number of elements coverable by disjoint independent parts.

    Tries every assignment of each element to a part or to nothing, pruning
    as soon as a part becomes dependent (oracles are downward closed).
    """
    ground = sorted(set(edge_ids))
    if len(ground) > budget.max_ground:
        raise BudgetExceededError(
            f"ground set of size {len(ground)} exceeds max_ground={budget.max_ground}",
            count=(len(oracles) + 1) ** len(ground),
            budget=(len(oracles) + 1) ** budget.max_ground)
    parts: list[set[int]] = [set() for _ in oracles]
    best = 0

    def extend(i: int, covered: int) -> None:
        nonlocal best
        if covered + len(ground) - i <= best:
            return
        if i == len(ground):
            best = covered
            return
        x = ground[i]
        for part, oracle in zip(parts, oracles):
            part.add(x)
            if oracle(frozenset(part)):
                extend(i + 1, covered + 1)
            part.discard(x)
        extend(i + 1, covered)

    extend(0, 0)
    return best
