"""Command-line entry point: ``hiddengraph {topk,core,decompose,bench}``.

Exit codes: 0 success, 2 usage error, 3 input error, 4 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

from . import bench
from .cores import core_decomposition
from .errors import DuplicateProbe, EmptyInput, InvalidK, MalformedLine, NotPresent, Ungraphable
from .graph import LabeledGraph
from .graphio import DegreeSequenceSpec, fit_power_law, gen_gnp, gen_power_law, load_edge_list
from .gsoe import gsoe_top_k
from .hidden_core import hidden_core
from .probe import AdjacencyOracle, ProbeLedger

EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 2, 3, 4


class UsageError(Exception):
    pass


class InvariantViolation(Exception):
    pass


def _kv(text: str) -> dict[str, str]:
    out = {}
    for part in text.split(","):
        if not part:
            continue
        key, sep, val = part.partition("=")
        if not sep:
            raise UsageError(f"expected key=value, got {part!r}")
        out[key.strip()] = val.strip()
    return out


def load_source(args) -> tuple[LabeledGraph, str, dict | None]:
    """Resolve ``--edges`` / ``--gnp`` / ``--powerlaw`` into a labelled graph."""
    if args.edges:
        return load_edge_list(args.edges), args.edges, None
    try:
        if args.gnp:
            kv = _kv(args.gnp)
            params = {"model": "gnp", "n": int(kv["n"]), "p": float(kv["p"]), "seed": int(kv.get("seed", 0))}
            g = gen_gnp(params["n"], params["p"], params["seed"])
        else:
            kv = _kv(args.powerlaw)
            n, seed = int(kv["n"]), int(kv.get("seed", 0))
            if "m" in kv:
                spec = fit_power_law(n, int(kv["m"]), float(kv.get("alpha", 2.5)),
                                     int(kv["dmax"]) if "dmax" in kv else None, seed)
            else:
                spec = DegreeSequenceSpec(n, int(kv["dmin"]), int(kv["dmax"]), float(kv["alpha"]), seed)
            g = gen_power_law(spec)
            params = {"model": "powerlaw", "n": spec.n, "dmin": spec.d_min, "dmax": spec.d_max,
                      "alpha": spec.alpha, "seed": spec.seed}
    except KeyError as exc:
        raise UsageError(f"missing generator parameter {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    name = ",".join(f"{k}={v}" for k, v in params.items())
    return LabeledGraph(g, list(range(g.n + 1))), name, params


def _emit_json(payload: dict, path: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path in (None, "-"):
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def cmd_topk(args) -> int:
    lg, name, _ = load_source(args)
    g, lab = lg.graph, lg.labels
    oracle = AdjacencyOracle(g.n, g.edges())
    res = gsoe_top_k(oracle, args.k)
    payload = {
        "graph": {"name": name, "n": g.n, "m": g.m},
        "k": args.k,
        "entries": [{"vertex": lab[v], "degree": d} for v, d in res.entries],
        "probes": res.probes,
        "rounds": res.rounds,
    }
    if args.baseline:
        degs = sorted((g.degree(v) for v in g.vertices()), reverse=True)
        want = {v for v in g.vertices() if g.degree(v) >= degs[args.k - 1]}
        payload["baseline"] = {"agrees": want == res.vertices, "probes": g.n * (g.n - 1) // 2}
    if args.json:
        _emit_json(payload, args.json)
    if args.json != "-":
        for v, d in res.entries:
            print(f"{lab[v]}\t{d}")
        print(f"# probes={res.probes} rounds={res.rounds}", file=sys.stderr)
    if args.baseline and not payload["baseline"]["agrees"]:
        raise InvariantViolation("GSOE disagrees with the degree ranking")
    return 0


def cmd_core(args) -> int:
    lg, name, _ = load_source(args)
    g, lab = lg.graph, lg.labels
    oracle = AdjacencyOracle(g.n, g.edges())
    res = hidden_core(oracle, args.K, ProbeLedger(g.n, track_pairs=g.n <= 2000))
    payload = {
        "graph": {"name": name, "n": g.n, "m": g.m},
        "K": args.K,
        "exists": res.exists,
        "vertices": sorted(lab[v] for v in res.vertices),
        "core_numbers": {str(lab[v]): c for v, c in sorted(res.core_numbers.items())},
        "probes": res.probes,
        "max_probes": res.max_probes,
        "gain": round(res.gain, 6),
        "reason": res.reason,
    }
    agrees = True
    if args.baseline:
        want, bprobes = bench.baseline_core(oracle, args.K)
        agrees = want == set(res.vertices)
        payload["baseline"] = {"agrees": agrees, "probes": bprobes}
    if args.json:
        _emit_json(payload, args.json)
    if args.json != "-":
        if res.exists:
            print(f"{args.K}-core exists: {len(res.vertices)} vertices, {len(res.edges)} edges")
            print(" ".join(str(x) for x in payload["vertices"]))
        else:
            print(f"{args.K}-core does not exist ({res.reason})")
        print(f"probes={res.probes} max_probes={res.max_probes} gain={res.gain:.4f}")
        if args.baseline:
            print(f"baseline probes={payload['baseline']['probes']} agreement={str(agrees).lower()}")
    if not agrees:
        raise InvariantViolation("HiddenCore disagrees with the brute-force baseline")
    return 0


def cmd_decompose(args) -> int:
    lg, _, _ = load_source(args)
    cn = core_decomposition(lg.graph)
    out = open(args.csv, "w", newline="") if args.csv and args.csv != "-" else sys.stdout
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["vertex", "core"])
        for v in lg.graph.vertices():
            w.writerow([lg.labels[v], cn[v]])
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"# degeneracy={cn.degeneracy}", file=sys.stderr)
    return 0


def cmd_bench(args) -> int:
    try:
        Ks = [int(x) for x in args.K.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad K list {args.K!r}") from None
    if not Ks:
        raise UsageError("K list is empty")
    lg, name, params = load_source(args)
    report = bench.run_bench(lg.graph, Ks, name=args.name or name, generator=params,
                             baseline=args.baseline)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json() + "\n")
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report.to_csv())
    sys.stdout.write(report.to_csv())
    if args.baseline and not all(r.baseline_agrees for r in report.rows):
        raise InvariantViolation("HiddenCore disagrees with the brute-force baseline")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hiddengraph", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add_source(sp):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--edges", metavar="PATH", help="whitespace-separated edge list")
        g.add_argument("--gnp", metavar="n=..,p=..,seed=..")
        g.add_argument("--powerlaw", metavar="n=..,dmin=..,dmax=..,alpha=..,seed=..",
                       help="or n=..,m=..[,alpha=..][,dmax=..] to fit d_min to an edge count")

    sp = sub.add_parser("topk", help="k highest-degree vertices (GSOE)")
    add_source(sp)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--baseline", action="store_true")
    sp.add_argument("--json", metavar="PATH", help="write JSON ('-' for stdout)")
    sp.set_defaults(func=cmd_topk)

    sp = sub.add_parser("core", help="K-core of a hidden graph (HiddenCore)")
    add_source(sp)
    sp.add_argument("--K", type=int, required=True)
    sp.add_argument("--baseline", action="store_true", help="also probe every pair and compare")
    sp.add_argument("--json", metavar="PATH", help="write JSON ('-' for stdout)")
    sp.set_defaults(func=cmd_core)

    sp = sub.add_parser("decompose", help="core numbers of an explicit graph as CSV")
    add_source(sp)
    sp.add_argument("--csv", metavar="PATH")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("bench", help="probe gain of HiddenCore over a list of K")
    add_source(sp)
    sp.add_argument("--K", required=True, metavar="K1,K2,...")
    sp.add_argument("--name")
    sp.add_argument("--baseline", action="store_true")
    sp.add_argument("--json", metavar="PATH")
    sp.add_argument("--csv", metavar="PATH")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, InvalidK) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, MalformedLine, EmptyInput, Ungraphable) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InvariantViolation, DuplicateProbe, NotPresent) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
