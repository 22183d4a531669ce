"""Experiment drivers: named-graph corpus, random-graph sweeps, counterexample scans.

Randomised runs derive the graph for trial ``i`` from ``gnp(n, p, seed=(seed, i))``,
so results are independent of worker count and completion order.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Callable, Iterable, Sequence

import numpy as np

from chromatic_bounds.bounds import BoundReport, compute_report, generalized_hoffman, hoffman, ratio_bounds
from chromatic_bounds.config import DEFAULT_CONFIG, Config
from chromatic_bounds.errors import InputError
from chromatic_bounds.exact import Coloring, chromatic_number, independence_number
from chromatic_bounds.graphs import Graph, adjacency_matrix, from_edge_list, generate, gnp, graph_from_mask
from chromatic_bounds.linalg import eig_symmetric, inertia_of, spectral_sums

JOBS_ENV = "CHROMATIC_BOUNDS_JOBS"

CONSISTENT = "consistent"
CONJECTURE_VIOLATION = "CONJECTURE-VIOLATION"
WILF_VIOLATION = "WILF-VIOLATION"
BUDGET_EXCEEDED = "budget-exceeded"
VERDICTS = (CONSISTENT, CONJECTURE_VIOLATION, WILF_VIOLATION, BUDGET_EXCEEDED)

# Substitute for a named-graph database: standard named graphs and families.
DEFAULT_CORPUS = (
    "complete:3", "complete:4", "complete:5", "complete:8",
    "cycle:4", "cycle:5", "cycle:7", "path:5", "star:5", "wheel:6",
    "complete_multipartite:2,3", "complete_multipartite:3,3,3",
    "petersen", "kneser:6:2", "kneser:7:2", "kneser:7:3",
    "hypercube:3", "hypercube:4", "hadamard:2", "hadamard:4",
    "barbell:4", "barbell:8", "coxeter",
)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _map(fn: Callable, items: Sequence, jobs: int | None) -> list:
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# --- corpus ----------------------------------------------------------------

@dataclass
class CorpusRow:
    graph_id: str
    report: BoundReport | None = None
    error: str | None = None

    @property
    def gen_hoffman_beats_hoffman(self) -> bool | None:
        return None if self.report is None else self.report.gen_hoffman > self.report.hoffman + 1e-9

    @property
    def conjecture_beats_hoffman(self) -> bool | None:
        return None if self.report is None else self.report.conjecture > self.report.hoffman + 1e-9


@dataclass(frozen=True)
class CorpusOptions:
    exact: bool = True
    barnes: bool = False
    node_budget: int = DEFAULT_CONFIG.node_budget
    config: Config = DEFAULT_CONFIG


def _corpus_task(args: tuple[str, Graph, CorpusOptions]) -> CorpusRow:
    graph_id, g, opts = args
    try:
        report = compute_report(g, exact=opts.exact, barnes=opts.barnes,
                                node_budget=opts.node_budget, config=opts.config)
        report.graph_id = graph_id
        return CorpusRow(graph_id, report)
    except Exception as exc:  # isolate per-graph failures into the row
        return CorpusRow(graph_id, error=f"{type(exc).__name__}: {exc}")


def corpus_graphs(specs: Iterable[str] = DEFAULT_CORPUS) -> list[Graph]:
    return [generate(s) for s in specs]


def corpus_run(graphs: Sequence[Graph], options: CorpusOptions = CorpusOptions(),
               jobs: int | None = None) -> list[CorpusRow]:
    """One row per graph, in input order."""
    tasks = [(g.name or f"graph{i + 1}", g, options) for i, g in enumerate(graphs)]
    return _map(_corpus_task, tasks, jobs)


def _is_bipartite(r: BoundReport) -> bool:
    return r.chi_exact == 2 if r.chi_exact is not None else abs(r.s_plus - r.s_minus) <= 1e-9 * max(1.0, r.s_plus)


def corpus_summary(rows: Sequence[CorpusRow]) -> dict:
    """Share of graphs where the new bounds beat Hoffman, excluding complete, edgeless and bipartite graphs."""
    eligible = [
        r.report for r in rows
        if r.report is not None and r.report.m > 0
        and r.report.m != comb(r.report.n, 2) and not _is_bipartite(r.report)
    ]
    k = len(eligible)
    gh = sum(r.gen_hoffman > r.hoffman + 1e-9 for r in eligible)
    cj = sum(r.conjecture > r.hoffman + 1e-9 for r in eligible)
    return {
        "graphs": len(rows),
        "eligible": k,
        "gen_hoffman_beats_hoffman_pct": 100.0 * gh / k if k else 0.0,
        "conjecture_beats_hoffman_pct": 100.0 * cj / k if k else 0.0,
        "errors": sum(r.error is not None for r in rows),
    }


# --- random sweeps ---------------------------------------------------------

def bollobas_estimate(n: int, p: float) -> float:
    """``(1/2) n / log_b(n)`` with ``b = 1/(1-p)``: a reference value, not a bound."""
    if not 0.0 < p < 1.0 or n < 2:
        raise InputError("Bollobas estimate needs 0 < p < 1 and n >= 2")
    b = 1.0 / (1.0 - p)
    return 0.5 * n / (math.log(n) / math.log(b))


@dataclass
class SweepResult:
    n: int
    p: float
    seed: int
    reports: list[BoundReport]
    mean_hoffman: float
    mean_gen_hoffman: float
    mean_conjecture: float
    bollobas_formula: float


def _sweep_task(args: tuple[int, float, int, int, Config]) -> BoundReport:
    n, p, seed, trial, config = args
    g = gnp(n, p, (seed, trial))
    return compute_report(g, config=config)


def random_sweep(n: int, p: float, trials: int, seed: int, jobs: int | None = None,
                 config: Config = DEFAULT_CONFIG) -> SweepResult:
    if trials < 1:
        raise InputError("trials must be >= 1")
    if not 0.0 < p < 1.0:
        raise InputError("p must lie strictly between 0 and 1")
    reports = _map(_sweep_task, [(n, p, seed, i, config) for i in range(trials)], jobs)
    return SweepResult(
        n, p, seed, reports,
        float(np.mean([r.hoffman for r in reports])),
        float(np.mean([r.gen_hoffman for r in reports])),
        float(np.mean([r.conjecture for r in reports])),
        bollobas_estimate(n, p),
    )


# --- counterexample scans --------------------------------------------------

@dataclass
class SearchFinding:
    graph_id: str
    seed: str
    n: int
    m: int
    hoffman: float
    gen_hoffman: float
    weaker: float
    conjecture: float
    mu_max: float
    chi_exact: int | None
    chi_lower: int
    chi_upper: int
    alpha: int | None
    verdict: str
    edges: list[tuple[int, int]] = field(default_factory=list)
    spectrum: list[float] = field(default_factory=list)
    coloring: list[int] = field(default_factory=list)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["edges"] = [list(e) for e in self.edges]
        return d


def classify(conjecture: float, weaker: float, mu_max: float, chi_exact: int | None,
             chi_lower: int, tol: float = DEFAULT_CONFIG.verdict_tol) -> str:
    """Verdict for one graph.

    An exact chi below the conjectured bound is a CONJECTURE-VIOLATION.  A ratio
    ``S+/S-`` above ``mu_1`` contradicts the bound through ``chi <= 1 + mu_1``
    even without chi, so it is a WILF-VIOLATION whenever chi is not exact (or
    agrees).  An unresolved chi that cannot rule out a violation is
    budget-exceeded.
    """
    if chi_exact is not None and conjecture > chi_exact + tol:
        return CONJECTURE_VIOLATION
    if weaker > mu_max + tol:
        return WILF_VIOLATION
    if chi_exact is None and conjecture > chi_lower + tol:
        return BUDGET_EXCEEDED
    return CONSISTENT


def evaluate_graph(g: Graph, graph_id: str, seed: str = "", node_budget: int = DEFAULT_CONFIG.node_budget,
                   with_alpha: bool = False, config: Config = DEFAULT_CONFIG) -> SearchFinding:
    s = eig_symmetric(adjacency_matrix(g), config)
    sums = spectral_sums(s, inertia_of(s))
    weaker, conj = ratio_bounds(sums, s.zero_tol)
    gh, _ = generalized_hoffman(s, config)
    chi = chromatic_number(g, node_budget)
    alpha = independence_number(g, node_budget).value if with_alpha else None
    verdict = classify(conj, weaker, s.mu_max, chi.value, chi.lower, config.verdict_tol)
    return SearchFinding(
        graph_id=graph_id, seed=seed, n=g.n, m=g.m,
        hoffman=hoffman(s), gen_hoffman=gh, weaker=weaker, conjecture=conj, mu_max=s.mu_max,
        chi_exact=chi.value, chi_lower=chi.lower, chi_upper=chi.upper, alpha=alpha, verdict=verdict,
        edges=g.edge_list(), spectrum=[float(x) for x in s.values],
        coloring=list(chi.witness.assignment),
    )


@dataclass
class ScanResult:
    spec: str
    seed: int
    total: int
    counts: dict[str, int]
    findings: list[SearchFinding]

    @property
    def violations(self) -> int:
        return self.counts.get(CONJECTURE_VIOLATION, 0) + self.counts.get(WILF_VIOLATION, 0)


def parse_scan_spec(spec: str) -> tuple[str, tuple]:
    """``gnp:n:p`` or ``exhaustive:max_n``."""
    parts = spec.split(":")
    try:
        if parts[0] == "gnp" and len(parts) == 3:
            n, p = int(parts[1]), float(parts[2])
            if n < 1 or not 0.0 <= p <= 1.0:
                raise ValueError
            return "gnp", (n, p)
        if parts[0] == "exhaustive" and len(parts) == 2:
            max_n = int(parts[1])
            if not 1 <= max_n <= 7:
                raise ValueError
            return "exhaustive", (max_n,)
    except ValueError:
        pass
    raise InputError(f"bad scan spec {spec!r}: expected 'gnp:<n>:<p>' or 'exhaustive:<max_n>' (max_n <= 7)")


def _scan_task(args) -> SearchFinding:
    kind, params, seed, index, budget, with_alpha, config = args
    if kind == "gnp":
        n, p = params
        g = gnp(n, p, (seed, index))
        return evaluate_graph(g, f"gnp:{n}:{p}:{seed}-{index}", f"{seed}-{index}", budget, with_alpha, config)
    n, mask = index
    return evaluate_graph(graph_from_mask(n, mask), f"mask:{n}:{mask}", "", budget, with_alpha, config)


def counterexample_scan(spec: str, trials: int, seed: int, node_budget: int = DEFAULT_CONFIG.node_budget,
                        jobs: int | None = None, keep_all: bool = False, with_alpha: bool = False,
                        config: Config = DEFAULT_CONFIG) -> ScanResult:
    """Evaluate sampled (or all) graphs and keep the non-consistent ones.

    ``trials`` is ignored for exhaustive scans.  ``keep_all`` retains consistent
    rows too.
    """
    kind, params = parse_scan_spec(spec)
    if kind == "gnp":
        if trials < 1:
            raise InputError("trials must be >= 1")
        indices = list(range(trials))
    else:
        indices = [(n, mask) for n in range(1, params[0] + 1) for mask in range(1 << comb(n, 2))]
    tasks = [(kind, params, seed, i, node_budget, with_alpha, config) for i in indices]
    rows = _map(_scan_task, tasks, jobs)
    counts = Counter(r.verdict for r in rows)
    kept = rows if keep_all else [r for r in rows if r.verdict != CONSISTENT]
    return ScanResult(spec, seed, len(rows), {v: counts.get(v, 0) for v in VERDICTS}, kept)


def recheck_finding(record: dict, node_budget: int = DEFAULT_CONFIG.node_budget,
                    config: Config = DEFAULT_CONFIG) -> dict:
    """Recompute a finding from its embedded witness (edge list, spectrum, coloring).

    Returns the fresh verdict and whether the stored spectrum, coloring and
    verdict reproduce.
    """
    g = from_edge_list(int(record["n"]), [tuple(e) for e in record["edges"]])
    fresh = evaluate_graph(g, record.get("graph_id", ""), record.get("seed", ""), node_budget, config=config)
    stored_spec = np.asarray(record.get("spectrum", []), dtype=float)
    spectrum_ok = stored_spec.shape == (g.n,) and bool(np.allclose(stored_spec, fresh.spectrum, atol=1e-8))
    coloring = Coloring(tuple(int(c) for c in record.get("coloring", [])))
    coloring_ok = coloring.is_proper(g) and (record.get("chi_exact") is None
                                             or coloring.colors_used == record["chi_exact"])
    return {
        "graph_id": record.get("graph_id", ""),
        "stored_verdict": record.get("verdict"),
        "fresh_verdict": fresh.verdict,
        "verdict_reproduced": fresh.verdict == record.get("verdict"),
        "spectrum_reproduced": spectrum_ok,
        "coloring_valid": coloring_ok,
        "chi_exact": fresh.chi_exact,
        "conjecture": fresh.conjecture,
    }


# --- output ----------------------------------------------------------------

REPORT_COLUMNS = (
    "graph_id", "n", "m", "hoffman", "gen_hoffman", "gen_hoffman_best_m", "weaker", "conjecture",
    "cvetkovic", "myers_liu", "edwards_elphick", "bollobas_nikiforov", "wilf_upper", "barnes",
    "alpha_bound", "alpha", "chi_exact", "chi_lower", "chi_upper", "mu_max", "mu_min", "s_plus", "s_minus",
    "inertia", "gen_hoffman_beats_hoffman", "conjecture_beats_hoffman", "degenerate", "error",
)

FINDING_COLUMNS = (
    "graph_id", "seed", "n", "m", "hoffman", "gen_hoffman", "weaker", "conjecture", "mu_max",
    "chi_exact", "chi_lower", "chi_upper", "alpha", "verdict", "edges", "spectrum", "coloring",
)

SWEEP_COLUMNS = ("trial", "graph_id", "n", "m", "hoffman", "gen_hoffman", "conjecture", "bollobas_formula")


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (tuple, list)):
        return ";".join("-".join(map(str, v)) if isinstance(v, (tuple, list)) else _cell(v) for v in value)
    return str(value)


def corpus_row_dict(row: CorpusRow) -> dict:
    out = {c: None for c in REPORT_COLUMNS}
    out["graph_id"] = row.graph_id
    out["error"] = row.error
    if row.report is not None:
        d = row.report.as_dict()
        for c in REPORT_COLUMNS:
            if c in d:
                out[c] = d[c]
        out["gen_hoffman_beats_hoffman"] = row.gen_hoffman_beats_hoffman
        out["conjecture_beats_hoffman"] = row.conjecture_beats_hoffman
    return out


def sweep_row_dicts(result: SweepResult) -> list[dict]:
    rows = [
        {"trial": i, "graph_id": r.graph_id, "n": r.n, "m": r.m, "hoffman": r.hoffman,
         "gen_hoffman": r.gen_hoffman, "conjecture": r.conjecture, "bollobas_formula": result.bollobas_formula}
        for i, r in enumerate(result.reports)
    ]
    rows.append({"trial": "mean", "graph_id": f"gnp:{result.n}:{result.p}:{result.seed}", "n": result.n,
                 "m": float(np.mean([r.m for r in result.reports])), "hoffman": result.mean_hoffman,
                 "gen_hoffman": result.mean_gen_hoffman, "conjecture": result.mean_conjecture,
                 "bollobas_formula": result.bollobas_formula})
    return rows


def to_csv(rows: Iterable[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def to_jsonl(rows: Iterable[dict]) -> str:
    return "".join(json.dumps(row, sort_keys=False, default=_json_default) + "\n" for row in rows)


def _json_default(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serialisable: {type(obj).__name__}")
