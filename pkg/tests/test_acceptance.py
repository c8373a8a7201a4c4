"""Acceptance criteria, one test each.

Each test appends a PASS/FAIL line to the summary printed at the end of the
pytest run (see ``conftest.py``) before asserting.
"""

import itertools
import json
import time

import numpy as np
import conftest
from sparsemaps import NotTightError, _kernels
from sparsemaps.augment import (augment_some, augment_some_then_any, iter_additions,
                                predict_any, predict_any_within_ambient,
                                verify_any_exhaustive)
from sparsemaps.cli import main
from sparsemaps.corpus import ambient_multigraphs, multigraphs, random_multigraph, random_sparse
from sparsemaps.graphio import format_graph
from sparsemaps.mapdecomp import (decompose_via_matching, decompose_via_orientation,
                                  verify_decomposition)
from sparsemaps.matroid import (BicycleOracle, GraphicOracle, decompose_trees_and_maps,
                                matroid_union_partition, truncation_independent,
                                verify_trees_and_maps)
from sparsemaps.multigraph import MultiGraph
from sparsemaps.oracle import (kmap_bruteforce_batch, sparse_bruteforce,
                               sparse_bruteforce_batch, union_partition_bruteforce)
from sparsemaps.pebble import classify_batch, run, witness_violates


def report(number, title, ok, detail, start):
    status = "PASS" if ok else "FAIL"
    line = f"[{status}] criterion {number}: {title} - {detail} ({time.perf_counter() - start:.2f} s)"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def bounded_corpus(n_max, ks, m_of):
    """Ambient-bounded graphs for each (n, k, l) with ``m = m_of(n, k, l)``."""
    for k in ks:
        for ell in range(2 * k):
            for n in range(1, n_max + 1):
                m = m_of(n, k, ell)
                if m < 0:
                    continue
                yield n, k, ell, ambient_multigraphs(n, m, k)


def test_criterion_1_k4_baseline(tmp_path, capsys):
    start = time.perf_counter()
    k4 = MultiGraph.complete(4)
    path = tmp_path / "k4.txt"
    path.write_text(format_graph(k4))
    code = main(["check", str(path), "-k", "2", "-l", "2", "--format", "machine"])
    doc = json.loads(capsys.readouterr().out)
    report_any = verify_any_exhaustive(k4, 2, 2)
    decomposed = 0
    for added in iter_additions(k4, 2, 2):
        h = k4.with_edges(added)
        decomposed += verify_decomposition(h, 2, decompose_via_matching(h, 2))
    ok = (code == 0 and doc["classification"] == "tight" and report_any.verdict
          and report_any.checked == 55 and decomposed == 55)
    report(1, "K_4 baseline", ok,
           f"check={doc['classification']}, any-2 verdict={report_any.verdict} over "
           f"{report_any.checked} multisets, {decomposed} verified decompositions", start)


def test_criterion_2_kmap_equivalence():
    start = time.perf_counter()
    total = disagreements = 0
    for k in (1, 2):
        for n in range(1, 5):
            batch = ambient_multigraphs(n, k * n, k)
            brute = kmap_bruteforce_batch(batch.eus, batch.evs, batch.ms, n, k)
            pebble = classify_batch(batch.eus, batch.evs, batch.ms, n, k, 0) == _kernels.TIGHT
            for i, g in enumerate(batch.graphs()):
                routes = [bool(brute[i]), bool(pebble[i])]
                for method in (decompose_via_matching, decompose_via_orientation):
                    try:
                        routes.append(verify_decomposition(g, k, method(g, k)))
                    except NotTightError:
                        routes.append(False)
                total += 1
                disagreements += len(set(routes)) != 1
    report(2, "k-map equivalence (matching, orientation, brute force, pebble game)",
           disagreements == 0 and total > 0,
           f"{disagreements} disagreements over {total} graphs", start)


def test_criterion_3_pebble_ground_truth():
    start = time.perf_counter()
    total = disagreements = 0
    for n in range(1, 6):
        for m in range(0, 9):
            batch = multigraphs(n, m)
            for k in (1, 2):
                for ell in range(2 * k):
                    fast = classify_batch(batch.eus, batch.evs, batch.ms, n, k, ell)
                    ref = sparse_bruteforce_batch(batch.eus, batch.evs, batch.ms, n, k, ell)
                    total += len(batch)
                    disagreements += int((fast != ref).sum())
    rng = np.random.default_rng(2024)
    randoms = 0
    for _ in range(1000):
        g = random_multigraph(7, int(rng.integers(0, 17)), rng, loop_weight=0.3)
        for k in (1, 2):
            for ell in range(2 * k):
                out = run(g, k, ell)
                ref = sparse_bruteforce(g, k, ell)
                randoms += 1
                bad = out.classification is not ref.classification
                if out.witness is not None:
                    bad |= not witness_violates(g, k, ell, out.witness)
                disagreements += bad
    report(3, "pebble game vs brute force", disagreements == 0,
           f"{disagreements} disagreements over {total} exhaustive and {randoms} random "
           f"n=7 cases", start)


def _any_addition_sweep(predict):
    total = mismatches = bad_counterexamples = 0
    examples = []
    for n, k, ell, batch in bounded_corpus(4, (1, 2), lambda n, k, ell: k * n - ell):
        for g in batch.graphs():
            total += 1
            res = verify_any_exhaustive(g, k, ell, limit=10**7)
            if not res.verdict:
                h = g.with_edges(res.counterexample.added)
                bad_counterexamples += run(h, k, 0).is_tight
            if predict(g, k, ell) != res.verdict:
                mismatches += 1
                if len(examples) < 3:
                    examples.append(f"n={n} k={k} l={ell} {[e[1:] for e in g.edges]}")
    return total, mismatches, bad_counterexamples, examples


def test_criterion_4_any_addition_prediction():
    start = time.perf_counter()
    total, mismatches, bad_ce, examples = _any_addition_sweep(predict_any)
    report(4, "(k,l)-tight iff any l ambient additions give a k-map",
           mismatches == 0 and bad_ce == 0,
           f"{mismatches} prediction mismatches over {total} graphs, {bad_ce} invalid "
           f"counterexamples; first mismatches: {'; '.join(examples) or 'none'}", start)


def test_criterion_4_exact_ambient_prediction():
    """Companion check: the ambient-aware predicate matches enumeration everywhere."""
    start = time.perf_counter()
    total, mismatches, bad_ce, _ = _any_addition_sweep(predict_any_within_ambient)
    report("4b", "ambient-aware any-addition predicate vs enumeration",
           mismatches == 0 and bad_ce == 0,
           f"{mismatches} mismatches over {total} graphs, {bad_ce} invalid counterexamples",
           start)


def test_criterion_5_augment_some():
    start = time.perf_counter()
    completed = refused = failures = 0
    for k in (1, 2):
        for n in range(1, 5):
            for ell in range(0, k * n + 1):
                for g in ambient_multigraphs(n, k * n - ell, k).graphs():
                    if sparse_bruteforce(g, k, 0).classification.is_sparse:
                        res = augment_some(g, k, ell)
                        ok = (len(res.added) == ell
                              and verify_decomposition(res.graph, k, res.decomposition))
                        completed += 1
                    else:
                        try:
                            augment_some(g, k, ell)
                            ok = False
                        except NotTightError as exc:
                            ok = exc.witness is not None and witness_violates(g, k, 0, exc.witness)
                        refused += 1
                    failures += not ok
    report(5, "some-l augmentation to a k-map", failures == 0,
           f"{completed} completed, {refused} refused with witnesses, {failures} failures", start)


def test_criterion_6_some_then_any():
    start = time.perf_counter()
    rng = np.random.default_rng(606)
    cases = failures = 0
    while cases < 500:
        k = int(rng.integers(1, 3))
        ell = int(rng.integers(0, 2 * k))
        p = int(rng.integers(0, 2 * k - ell))
        n = int(rng.integers(1, 8))
        g = random_sparse(n, k, ell, k * n - ell - p, rng)
        if g is None:
            continue
        res = augment_some_then_any(g, k, ell, p)
        ok = (len(res.added) == p and run(res.graph, k, ell).is_tight
              and predict_any(res.graph, k, ell))
        cases += 1
        failures += not ok
    report(6, "some-p then any-l augmentation", failures == 0,
           f"{failures} failures over {cases} random sparse graphs", start)


def test_criterion_7_trees_and_maps():
    start = time.perf_counter()
    problems = []
    k4 = MultiGraph.complete(4)
    p = decompose_trees_and_maps(k4, 2, 2)
    if not (verify_trees_and_maps(k4, p) and len(p.trees) == 2 and not p.maps):
        problems.append("K_4")
    g = k4.with_edges([(0, 1)])
    p = decompose_trees_and_maps(g, 2, 1)
    if not (verify_trees_and_maps(g, p) and len(p.trees) == 1 and len(p.maps) == 1):
        problems.append("K_4 plus doubled edge")
    rng = np.random.default_rng(707)
    tight = 0
    while tight < 200:
        k = int(rng.integers(1, 4))
        ell = int(rng.integers(0, k + 1))
        n = int(rng.integers(1, 9))
        g = random_sparse(n, k, ell, k * n - ell, rng)
        if g is None:
            continue
        tight += 1
        if not verify_trees_and_maps(g, decompose_trees_and_maps(g, k, ell)):
            problems.append(f"random k={k} l={ell} {g}")
    coverage = 0
    while coverage < 200:
        n = int(rng.integers(1, 6))
        g = random_multigraph(n, int(rng.integers(0, 11)), rng, loop_weight=0.3)
        kinds = (GraphicOracle(g), BicycleOracle(g))
        oracles = [kinds[int(i)] for i in rng.integers(0, 2, size=int(rng.integers(1, 4)))]
        got = matroid_union_partition(range(g.m), oracles).covered
        if got != union_partition_bruteforce(g, range(g.m), oracles):
            problems.append(f"coverage {g}")
        coverage += 1
    report(7, "trees-and-maps decomposition", not problems,
           f"{tight} random tight graphs, {coverage} coverage comparisons, "
           f"problems: {problems[:3] or 'none'}", start)


def _truncation_properties(g, k, ell):
    m = g.m
    indep = np.array([truncation_independent(g, k, ell, [e for e in range(m) if s >> e & 1])
                      for s in range(1 << m)])
    sizes = np.array([bin(s).count("1") for s in range(1 << m)])
    masks = np.arange(1 << m)
    problems = []
    for s in np.flatnonzero(indep):
        for e in range(m):
            if s >> e & 1 and not indep[s & ~(1 << e)]:
                problems.append(f"not downward closed at {s:b}")
    ext = np.zeros(1 << m, dtype=np.int64)
    for s in range(1 << m):
        for e in range(m):
            if not s >> e & 1 and indep[s | 1 << e]:
                ext[s] |= 1 << e
    ind_masks = masks[indep]
    for s in np.flatnonzero(indep):
        bigger = ind_masks[sizes[ind_masks] > sizes[s]]
        stuck = bigger[(bigger & ~s & ext[s]) == 0]
        if stuck.size:
            problems.append(f"exchange fails for {s:b} against {int(stuck[0]):b}")
    target = k * g.n - ell
    bases = {int(s) for s in masks[indep & (sizes == target)]}
    sparse_sets = {int(s) for s in masks[sizes == target]
                   if sparse_bruteforce(g.subgraph([e for e in range(m) if s >> e & 1]),
                                        k, 0).classification.is_sparse}
    if bases != sparse_sets:
        problems.append("bases differ from (k,0)-sparse sets of size kn-l")
    if any(ext[s] for s in bases):
        problems.append("a size kn-l independent set is not maximal")
    return problems


def test_criterion_8_truncation_matroid():
    start = time.perf_counter()
    k3_12 = MultiGraph.from_edges(3, [(v, v) for v in range(3)]
                                  + [p for p in itertools.combinations(range(3), 2) for _ in range(2)])
    problems = []
    checked = 0
    for name, g in (("K_3^{1,2}", k3_12), ("K_4", MultiGraph.complete(4))):
        for k in (1, 2):
            for ell in range(2 * k):
                checked += 1
                problems += [f"{name} k={k} l={ell}: {p}" for p in _truncation_properties(g, k, ell)]
    report(8, "truncated (k,0) matroid", not problems,
           f"{checked} (graph, k, l) cases over all edge subsets, problems: {problems[:3] or 'none'}",
           start)
