"""Time the batch kernels compiled with numba against the plain-Python fallback.

    python3 benchmarks/bench_kernels.py [--n 4] [--max-m 6] [--repeat 3]

Each mode runs in its own interpreter because the JIT switch is read at
import time from SPARSEMAPS_NO_JIT.
"""

import argparse
import json
import os
import subprocess
import sys
import time


def workload(n, max_m, repeat):
    from sparsemaps import USING_NUMBA
    from sparsemaps.corpus import multigraphs
    from sparsemaps.oracle import sparse_bruteforce_batch
    from sparsemaps.pebble import classify_batch

    batches = [multigraphs(n, m) for m in range(max_m + 1)]
    graphs = sum(len(b) for b in batches)
    params = [(k, ell) for k in (1, 2) for ell in range(2 * k)]

    def sweep(fn):
        for b in batches:
            for k, ell in params:
                fn(b.eus, b.evs, b.ms, n, k, ell)

    # first call compiles (or loads the cache); not timed
    sweep(classify_batch)
    sweep(sparse_bruteforce_batch)
    timings = {}
    for name, fn in (("pebble", classify_batch), ("bruteforce", sparse_bruteforce_batch)):
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            sweep(fn)
            best = min(best, time.perf_counter() - t0)
        timings[name] = best
    return {"numba": USING_NUMBA, "cases": graphs * len(params), "seconds": timings}


def run_child(no_jit, args):
    env = dict(os.environ, SPARSEMAPS_NO_JIT="1" if no_jit else "0")
    cmd = [sys.executable, __file__, "--child", "--n", str(args.n),
           "--max-m", str(args.max_m), "--repeat", str(args.repeat)]
    out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--max-m", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.child:
        print(json.dumps(workload(args.n, args.max_m, args.repeat)))
        return
    fast = run_child(False, args)
    slow = run_child(True, args)
    print(f"{fast['cases']} classifications (n={args.n}, m<={args.max_m}, k in 1..2, all l)")
    print(f"{'kernel':<12}{'numba s':>10}{'python s':>10}{'speedup':>10}")
    for name in fast["seconds"]:
        a, b = fast["seconds"][name], slow["seconds"][name]
        print(f"{name:<12}{a:>10.4f}{b:>10.4f}{b / a:>9.1f}x")
    if not fast["numba"]:
        print("note: numba unavailable, both columns ran the fallback")


if __name__ == "__main__":
    main()
