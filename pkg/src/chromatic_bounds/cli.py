"""Command-line front end.

Examples::

    chromatic-bounds bounds --family petersen --exact
    chromatic-bounds verify --family hadamard:4 --representation
    chromatic-bounds search --exhaustive --max-n 6 --seed 1
    chromatic-bounds sweep --n 20 --p 0.9 --trials 15 --seed 7 --csv out.csv
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from chromatic_bounds import harness
from chromatic_bounds.bounds import compute_report, optimize_w
from chromatic_bounds.config import DEFAULT_CONFIG, Config
from chromatic_bounds.conversion import (
    coloring_to_representation,
    hadamard_representation,
    pinching_check,
    representation_to_unitaries,
    verify_annihilation,
    verify_reversal,
)
from chromatic_bounds.errors import ImproperColoringError, InputError, NumericalError
from chromatic_bounds.exact import chromatic_number, parse_coloring
from chromatic_bounds.graphs import Graph, adjacency_matrix, as_weight_matrix, generate, parse_dimacs, parse_edge_list, random_weights

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_VIOLATION = 2

log = logging.getLogger("chromatic_bounds")


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="generator spec, e.g. petersen, kneser:7:2, barbell:8, gnp:10:0.5:3")
    src.add_argument("--dimacs", type=Path, help="DIMACS .col file")
    src.add_argument("--edgelist", type=Path, help="plain edge list: n on the first line, then 'u v' lines")


def _load_graph(args) -> Graph:
    if args.family:
        return generate(args.family)
    if args.dimacs:
        return parse_dimacs(args.dimacs.read_bytes(), name=args.dimacs.stem)
    return parse_edge_list(args.edgelist.read_bytes(), name=args.edgelist.stem)


def _load_weights(spec: str, g: Graph) -> np.ndarray:
    if spec.startswith("random:"):
        return random_weights(g.n, int(spec.split(":", 1)[1]))
    return as_weight_matrix(np.loadtxt(spec, ndmin=2), g.n)


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    if value is None:
        return "-"
    return str(value)


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text)


# --- commands --------------------------------------------------------------

def cmd_bounds(args, config: Config) -> int:
    g = _load_graph(args)
    weights = _load_weights(args.weights, g) if args.weights else None
    report = compute_report(g, exact=args.exact, barnes=args.barnes, weights=weights,
                            node_budget=args.budget, config=config)
    search = None
    if args.optimize_w:
        if args.seed is None:
            raise InputError("--optimize-w needs --seed")
        search = optimize_w(g, args.optimize_w, args.seed, config=config)
    if args.format == "json":
        d = report.as_dict()
        if search is not None:
            d["optimized_w"] = {"gen_hoffman": search.gen_hoffman, "gen_hoffman_best_m": search.gen_hoffman_best_m,
                                "weaker": search.weaker, "evaluations": search.evaluations}
        print(json.dumps(d, default=harness._json_default))
        return EXIT_OK
    if args.format == "csv":
        sys.stdout.write(harness.to_csv([harness.corpus_row_dict(harness.CorpusRow(report.graph_id, report))],
                                        harness.REPORT_COLUMNS))
        return EXIT_OK
    d = report.as_dict()
    print(f"graph {report.graph_id}: n={report.n} m={report.m} inertia={report.inertia}")
    keys = ["hoffman", "gen_hoffman", "gen_hoffman_best_m", "weaker", "conjecture", "cvetkovic", "myers_liu",
            "edwards_elphick", "bollobas_nikiforov", "wilf_upper", "s_plus", "s_minus"]
    if args.barnes:
        keys.append("barnes")
    if args.exact:
        keys += ["chi_exact", "chi_lower", "chi_upper", "alpha", "alpha_bound"]
    for k in keys:
        print(f"  {k:<20} {_fmt(d[k])}")
    if report.weighted is not None:
        w = report.weighted
        print(f"  {'weighted gen_hoffman':<20} {_fmt(w.gen_hoffman)} (m={w.gen_hoffman_best_m})")
        print(f"  {'weighted weaker':<20} {_fmt(w.weaker)}")
        print(f"  {'weighted conjecture':<20} {_fmt(w.conjecture)}")
    if search is not None:
        print(f"  {'best W gen_hoffman':<20} {_fmt(search.gen_hoffman)} (m={search.gen_hoffman_best_m})")
        print(f"  {'best W weaker':<20} {_fmt(search.weaker)} ({search.evaluations} evaluations)")
    if report.degenerate:
        print(f"  degenerate: {', '.join(report.degenerate)}")
    return EXIT_OK


def cmd_verify(args, config: Config) -> int:
    g = _load_graph(args)
    if args.coloring:
        phi = parse_coloring(args.coloring.read_text())
        try:
            phi.check_proper(g)
        except ImproperColoringError as exc:
            print(f"improper coloring: {exc}", file=sys.stderr)
            return EXIT_FAIL
    else:
        chi = chromatic_number(g, args.budget)
        phi = chi.witness
    c = max(phi.colors_used, 1)
    tol = config.unitary_tol
    weights = [("J", None)]
    if args.weights:
        weights.append((args.weights, _load_weights(args.weights, g)))
    results = []
    for label, w in weights:
        results.append((f"annihilation W={label}", verify_annihilation(g, w, phi, c)))
        results.append((f"reversal W={label}", verify_reversal(g, w, phi, c)))
        b = adjacency_matrix(g) if w is None else w * adjacency_matrix(g)
        results.append((f"pinching X=W*A W={label}", pinching_check(b, phi, c)))
    if args.seed is not None:
        rng = np.random.default_rng(args.seed)
        x = rng.standard_normal((g.n, g.n)) + 1j * rng.standard_normal((g.n, g.n))
        results.append(("pinching X=random", pinching_check(x, phi, c)))
    if args.representation:
        if g.name and g.name.startswith("hadamard:"):
            rep = hadamard_representation(int(g.name.split(":")[1]))
            label = "hadamard"
        else:
            rep = coloring_to_representation(phi, c, g)
            label = "fourier"
        results.append((f"representation {label} d={rep.dimension} edge overlap", rep.max_edge_overlap(g)))
        _, residual = representation_to_unitaries(rep, g, config)
        results.append((f"representation {label} d={rep.dimension} annihilation", residual))
    print(f"graph {g.name or 'input'}: n={g.n} m={g.m}, coloring with {c} colors")
    ok = True
    for label, value in results:
        passed = value <= tol
        ok &= passed
        print(f"  {label:<48} {value:.3e}  {'ok' if passed else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def _scan_output(result: harness.ScanResult, args) -> int:
    rows = [f.as_dict() for f in result.findings]
    if args.json:
        args.json.write_text(harness.to_jsonl(rows))
    if args.csv:
        args.csv.write_text(harness.to_csv(rows, harness.FINDING_COLUMNS))
    elif not args.json:
        sys.stdout.write(harness.to_csv(rows, harness.FINDING_COLUMNS))
    counts = ", ".join(f"{k}={v}" for k, v in result.counts.items())
    print(f"scan {result.spec} seed={result.seed}: {result.total} graphs; {counts}",
          file=sys.stderr if not (args.csv or args.json) else sys.stdout)
    return EXIT_VIOLATION if result.violations else EXIT_OK


def cmd_search(args, config: Config) -> int:
    if args.exhaustive:
        spec = f"exhaustive:{args.max_n}"
    elif args.gnp:
        spec = f"gnp:{args.gnp}"
    else:
        raise InputError("search needs --exhaustive or --gnp N:P")
    result = harness.counterexample_scan(spec, args.trials, args.seed, args.budget, args.jobs,
                                         keep_all=args.all, config=config)
    return _scan_output(result, args)


def cmd_sweep(args, config: Config) -> int:
    result = harness.random_sweep(args.n, args.p, args.trials, args.seed, args.jobs, config)
    rows = harness.sweep_row_dicts(result)
    if args.csv:
        args.csv.write_text(harness.to_csv(rows, harness.SWEEP_COLUMNS))
    if args.json:
        args.json.write_text(harness.to_jsonl(rows))
    print(f"n={result.n} p={result.p} trials={len(result.reports)} seed={result.seed}")
    print(f"  {'mean hoffman':<20} {result.mean_hoffman:.4f}")
    print(f"  {'mean gen_hoffman':<20} {result.mean_gen_hoffman:.4f}")
    print(f"  {'mean conjecture':<20} {result.mean_conjecture:.4f}")
    print(f"  {'bollobas formula':<20} {result.bollobas_formula:.4f}")
    return EXIT_OK


def cmd_corpus(args, config: Config) -> int:
    specs = args.family or harness.DEFAULT_CORPUS
    graphs = harness.corpus_graphs(specs)
    options = harness.CorpusOptions(exact=not args.no_exact, barnes=args.barnes,
                                    node_budget=args.budget, config=config)
    rows = harness.corpus_run(graphs, options, args.jobs)
    dicts = [harness.corpus_row_dict(r) for r in rows]
    if args.csv:
        args.csv.write_text(harness.to_csv(dicts, harness.REPORT_COLUMNS))
    if args.json:
        args.json.write_text(harness.to_jsonl(dicts))
    head = f"{'graph':<28}{'n':>4}{'m':>6}{'hoffman':>10}{'gen_hoff':>10}{'conj':>10}{'chi':>5}"
    print(head)
    for r in rows:
        if r.report is None:
            print(f"{r.graph_id:<28} error: {r.error}")
            continue
        rep = r.report
        print(f"{r.graph_id:<28}{rep.n:>4}{rep.m:>6}{rep.hoffman:>10.4f}{rep.gen_hoffman:>10.4f}"
              f"{rep.conjecture:>10.4f}{_fmt(rep.chi_exact):>5}")
    summary = harness.corpus_summary(rows)
    print(f"gen_hoffman > hoffman on {summary['gen_hoffman_beats_hoffman_pct']:.0f}% and "
          f"conjecture > hoffman on {summary['conjecture_beats_hoffman_pct']:.0f}% "
          f"of {summary['eligible']} non-complete, non-bipartite graphs")
    return EXIT_OK if summary["errors"] == 0 else EXIT_FAIL


def cmd_recheck(args, config: Config) -> int:
    ok = True
    for line in args.findings.read_text().splitlines():
        if not line.strip():
            continue
        out = harness.recheck_finding(json.loads(line), args.budget, config)
        good = out["verdict_reproduced"] and out["spectrum_reproduced"] and out["coloring_valid"]
        ok &= good
        print(json.dumps(out))
    return EXIT_OK if ok else EXIT_FAIL


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromatic-bounds", description=__doc__.split("\n\n")[0])
    parser.add_argument("--show-config", action="store_true", help="print default tolerances and exit")
    parser.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE",
                        help="override a tolerance from the config record (repeatable)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command")

    def budget(p):
        p.add_argument("--budget", type=int, default=DEFAULT_CONFIG.node_budget, help="branch-and-bound node budget")

    def jobs(p):
        p.add_argument("--jobs", type=int, default=None,
                       help=f"parallel workers (default from ${harness.JOBS_ENV}, else 1)")

    p = sub.add_parser("bounds", help="all spectral bounds for one graph")
    _add_input(p)
    p.add_argument("--exact", action="store_true", help="also compute exact chi and alpha")
    p.add_argument("--barnes", action="store_true", help="run the diagonal-scaling heuristic")
    p.add_argument("--weights", help="weight matrix file (whitespace-separated) or random:SEED")
    p.add_argument("--optimize-w", type=int, metavar="BUDGET", help="hill-climb over edge weights")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    budget(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="check the diagonal-unitary conversion identities")
    _add_input(p)
    p.add_argument("--coloring", type=Path, help="file with one color per line (vertex order)")
    p.add_argument("--weights", help="extra weight matrix file or random:SEED (W=J is always checked)")
    p.add_argument("--representation", action="store_true", help="also check a normalized orthogonal representation")
    p.add_argument("--seed", type=int, help="adds a pinching check on a seeded random complex X")
    budget(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="counterexample scan for chi >= 1 + S+/S-")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true", help="all labelled graphs up to --max-n vertices")
    mode.add_argument("--gnp", metavar="N:P", help="random G(n, p) graphs")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--all", action="store_true", help="emit consistent rows too")
    p.add_argument("--csv", type=Path)
    p.add_argument("--json", type=Path, help="JSON lines output")
    budget(p)
    jobs(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sweep", help="mean bounds over random G(n, p)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--trials", type=int, default=15)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv", type=Path)
    p.add_argument("--json", type=Path)
    jobs(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("corpus", help="bound table for the bundled named-graph corpus")
    p.add_argument("--family", action="append", help="graph spec to include instead of the default corpus")
    p.add_argument("--no-exact", action="store_true")
    p.add_argument("--barnes", action="store_true")
    p.add_argument("--csv", type=Path)
    p.add_argument("--json", type=Path)
    budget(p)
    jobs(p)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("recheck", help="re-verify findings from a JSON lines file")
    p.add_argument("findings", type=Path)
    budget(p)
    p.set_defaults(func=cmd_recheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        overrides = dict(item.split("=", 1) for item in args.tol)
        config = DEFAULT_CONFIG.with_overrides(overrides)
    except (ValueError, KeyError) as exc:
        parser.error(f"bad --tol: {exc}")
    if args.show_config:
        for key, value in config.as_dict().items():
            print(f"{key} = {value}")
        return EXIT_OK
    if not args.command:
        parser.print_help()
        return EXIT_FAIL
    try:
        return args.func(args, config)
    except (InputError, NumericalError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
