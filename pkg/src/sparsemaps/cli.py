"""Command-line front end.

Exit codes: 0 positive result, 1 negative result with witness,
2 usage or input error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import augment as aug
from .errors import (BudgetExceededError, CountMismatchError, InvalidParametersError,
                     NotTightError, SparsityError)
from .graphio import GraphFileError, read_graph
from .mapdecomp import decompose_via_matching, decompose_via_orientation, verify_decomposition
from .matroid import decompose_trees_and_maps, verify_trees_and_maps
from .multigraph import MultiGraph
from .pebble import check_parameters, run, witness_violates

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _sorted(vs) -> list[int]:
    return sorted(int(v) for v in vs)


def _witness(g: MultiGraph, k: int, ell: int, witness) -> list[int] | None:
    if witness is None:
        return None
    if not witness_violates(g, k, ell, witness):
        raise AssertionError(f"witness {sorted(witness)} does not violate ({k}, {ell})-sparsity")
    return _sorted(witness)


def _decomposition_doc(g: MultiGraph, k: int, d) -> dict:
    if not verify_decomposition(g, k, d):
        raise AssertionError("map decomposition failed verification")
    return {
        "edges": [{"edge": e, "map": i, "tail": t}
                  for e, (i, t) in enumerate(zip(d.map_index, d.tail))],
        "maps": d.maps(),
    }


def _graph_params(args, g: MultiGraph) -> dict:
    return {"n": g.n, "m": g.m, "k": args.k}


def cmd_check(args) -> tuple[dict, int]:
    g = read_graph(args.file)
    check_parameters(args.k, args.ell)
    out = run(g, args.k, args.ell)
    for v in range(g.n):
        outdeg = sum(1 for t in out.orientation.values() if t == v)
        if outdeg + out.pebble_counts[v] != args.k:
            raise AssertionError(f"pebble invariant broken at vertex {v}")
    doc = {
        "parameters": {**_graph_params(args, g), "l": args.ell},
        "classification": out.classification.value,
        "pebbles": list(out.pebble_counts),
        "orientation": [{"edge": e, "tail": t} for e, t in sorted(out.orientation.items())],
        "rejected": list(out.rejected),
        "witness": _witness(g, args.k, args.ell, out.witness),
    }
    return doc, EXIT_OK if out.is_sparse else EXIT_NEGATIVE


def cmd_decompose_maps(args) -> tuple[dict, int]:
    g = read_graph(args.file)
    if args.k < 1:
        raise InvalidParametersError("k must be >= 1")
    methods = ["matching", "orientation"] if args.method == "both" else [args.method]
    funcs = {"matching": decompose_via_matching, "orientation": decompose_via_orientation}
    doc: dict = {"parameters": {**_graph_params(args, g), "method": args.method}, "certificates": {}}
    outcomes = {}
    for name in methods:
        try:
            d = funcs[name](g, args.k)
        except NotTightError as exc:
            outcomes[name] = False
            doc["certificates"][name] = {"witness": _witness(g, args.k, 0, exc.witness),
                                         "reason": str(exc)}
        else:
            outcomes[name] = True
            doc["certificates"][name] = _decomposition_doc(g, args.k, d)
    if len(set(outcomes.values())) > 1:
        raise AssertionError(f"decomposition methods disagree: {outcomes}")
    ok = all(outcomes.values())
    doc["classification"] = "k-map" if ok else "not-tight"
    return doc, EXIT_OK if ok else EXIT_NEGATIVE


def cmd_decompose_trees_maps(args) -> tuple[dict, int]:
    g = read_graph(args.file)
    if not 0 <= args.ell <= args.k:
        raise UsageError(f"trees-and-maps decomposition needs 0 <= l <= k; got l={args.ell}, k={args.k}")
    doc: dict = {"parameters": {**_graph_params(args, g), "l": args.ell}}
    try:
        p = decompose_trees_and_maps(g, args.k, args.ell)
    except NotTightError as exc:
        doc["classification"] = "not-tight"
        doc["witness"] = _witness(g, args.k, args.ell, exc.witness)
        return doc, EXIT_NEGATIVE
    if not verify_trees_and_maps(g, p):
        raise AssertionError("trees-and-maps partition failed verification")
    doc["classification"] = "tight"
    doc["trees"] = [list(t) for t in p.trees]
    doc["maps"] = [list(m) for m in p.maps]
    return doc, EXIT_OK


def _report_doc(report) -> dict:
    doc = {"verdict": report.verdict, "checked": report.checked,
           "verified": report.verified, "probabilistic": report.sampled}
    if report.counterexample is not None:
        doc["counterexample"] = {
            "added": [list(s) for s in report.counterexample.added],
            "witness": None if report.counterexample.witness is None
            else _sorted(report.counterexample.witness),
        }
    return doc


def cmd_augment(args) -> tuple[dict, int]:
    g = read_graph(args.file)
    params = {**_graph_params(args, g), "l": args.ell,
              "mode": "some-any" if args.some_any else "some"}
    if args.some_any:
        params["p"] = args.p
        required = args.k * g.n - args.ell - args.p
    else:
        required = args.k * g.n - args.ell
    if g.m != required:
        raise UsageError(f"this augmentation needs m = {required} edges, the file has {g.m}")
    doc: dict = {"parameters": params}
    try:
        if args.some_any:
            res = aug.augment_some_then_any(g, args.k, args.ell, args.p,
                                            verify_any=args.verify_any, limit=args.budget)
        else:
            res = aug.augment_some(g, args.k, args.ell)
    except NotTightError as exc:
        wl = args.ell if args.some_any else 0
        doc["classification"] = "not-sparse"
        doc["witness"] = _witness(g, args.k, wl, exc.witness)
        return doc, EXIT_NEGATIVE
    doc["added"] = [list(s) for s in res.added]
    doc["added_edge_ids"] = list(res.added_ids)
    if args.some_any:
        check = run(res.graph, args.k, args.ell).classification
        if check is not res.classification:
            raise AssertionError("augmented graph classification changed on re-run")
        doc["classification"] = res.classification.value
        if res.any_report is not None:
            doc["any"] = _report_doc(res.any_report)
    else:
        doc["classification"] = "k-map"
        doc["decomposition"] = _decomposition_doc(res.graph, args.k, res.decomposition)
    return doc, EXIT_OK


def cmd_verify_any(args) -> tuple[dict, int]:
    g = read_graph(args.file)
    check_parameters(args.k, args.ell)
    required = args.k * g.n - args.ell
    if g.m != required:
        raise UsageError(f"verify-any needs m = kn - l = {required} edges, the file has {g.m}")
    predicted = aug.predict_any(g, args.k, args.ell)
    try:
        report = aug.verify_any_exhaustive(g, args.k, args.ell, limit=args.budget)
    except BudgetExceededError:
        if args.sample is None:
            raise
        report = aug.verify_any_sampled(g, args.k, args.ell, args.sample, args.seed)
    exact = aug.predict_any_within_ambient(g, args.k, args.ell)
    if not report.sampled and report.verdict != exact:
        raise AssertionError(f"exhaustive verdict {report.verdict} disagrees with exact test {exact}")
    doc = {"parameters": {**_graph_params(args, g), "l": args.ell, "budget": args.budget},
           "prediction": predicted,
           "prediction_within_ambient": exact,
           "agreement": report.verdict == predicted,
           **_report_doc(report)}
    if report.verdict != predicted:
        doc["note"] = ("graph is not (k,l)-sparse only on single vertices whose loops the "
                       "ambient graph cannot extend; every ambient addition still gives a k-map")
    if report.counterexample is not None:
        h = g.with_edges(report.counterexample.added)
        if run(h, args.k, 0).is_tight:
            raise AssertionError("counterexample augmentation is (k, 0)-tight")
        if report.counterexample.witness is not None:
            _witness(h, args.k, 0, report.counterexample.witness)
    return doc, EXIT_OK if report.verdict else EXIT_NEGATIVE


def _emit_text(doc: dict, stream) -> None:
    def line(key, value):
        print(f"{key}: {value}", file=stream)

    line("command", doc["command"])
    line("parameters", " ".join(f"{k}={v}" for k, v in doc["parameters"].items()))
    for key, value in doc.items():
        if key in ("command", "parameters"):
            continue
        if isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{key}:", file=stream)
            for item in value:
                print("  " + " ".join(f"{k}={v}" for k, v in item.items()), file=stream)
        elif isinstance(value, list):
            line(key, " ".join(str(v) for v in value) if value and not isinstance(value[0], list)
                 else " | ".join(" ".join(map(str, part)) for part in value))
        elif isinstance(value, dict):
            print(f"{key}:", file=stream)
            for k, v in value.items():
                print(f"  {k}: {json.dumps(v)}", file=stream)
        else:
            line(key, value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparsemaps",
        description="Sparsity, pebble games and map decompositions of multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ell=True):
        p.add_argument("file", help="graph file, or '-' for stdin")
        p.add_argument("-k", type=int, required=True)
        if ell:
            p.add_argument("-l", dest="ell", type=int, required=True)
        p.add_argument("--format", choices=("text", "machine"), default="text")
        p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("check", help="classify as tight / sparse / not-sparse")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose-maps", help="split a (k,0)-tight graph into k maps")
    common(p, ell=False)
    p.add_argument("--method", choices=("matching", "orientation", "both"), default="both")
    p.set_defaults(func=cmd_decompose_maps)

    p = sub.add_parser("decompose-trees-maps", help="l spanning trees plus k-l spanning maps")
    common(p)
    p.set_defaults(func=cmd_decompose_trees_maps)

    p = sub.add_parser("augment", help="add edges to reach a k-map or a tight graph")
    common(p)
    p.add_argument("--some-any", action="store_true",
                   help="add p edges to reach (k,l)-tightness instead of l edges to a k-map")
    p.add_argument("-p", type=int, default=0)
    p.add_argument("--verify-any", action="store_true",
                   help="with --some-any, exhaustively check the any-l property afterwards")
    p.add_argument("--budget", type=int, default=aug.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("verify-any", help="check that any l added edges give a k-map")
    common(p)
    p.add_argument("--budget", type=int, default=aug.DEFAULT_BUDGET)
    p.add_argument("--sample", type=int, default=None,
                   help="fall back to this many random additions when over budget")
    p.set_defaults(func=cmd_verify_any)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        doc, code = args.func(args)
    except (GraphFileError, UsageError, InvalidParametersError, CountMismatchError) as exc:
        print(f"sparsemaps {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"sparsemaps {args.command}: refused: {exc}; rerun with a larger --budget "
              f"or --sample N", file=sys.stderr)
        return EXIT_BUDGET
    except SparsityError as exc:
        print(f"sparsemaps {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = {"command": args.command, **doc,
           "elapsed_seconds": round(time.perf_counter() - start, 6)}
    if args.format == "machine":
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        _emit_text(doc, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
