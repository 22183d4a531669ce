"""Spectral bounds on the chromatic number.

All lower bounds here take a :class:`~chromatic_bounds.linalg.Spectrum`
(of ``A`` or of a Schur-weighted ``W*A``).  Graphs without edges are
*degenerate*: lower bounds fall back to 1 (the ratio bounds to 0, so that
``1 + S+/S-`` is 1) and the bound's name is recorded in ``degenerate``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from chromatic_bounds.config import DEFAULT_CONFIG, Config
from chromatic_bounds.errors import InputError
from chromatic_bounds.graphs import Graph, adjacency_matrix, as_weight_matrix, schur_product
from chromatic_bounds.linalg import Spectrum, SpectralSums, eig_symmetric, inertia_of, spectral_sums


@dataclass
class AuxiliaryBounds:
    cvetkovic: float
    myers_liu: float
    edwards_elphick: float
    bollobas_nikiforov: float
    wilf_upper: float
    degenerate: tuple[str, ...] = ()


@dataclass
class WeightedBounds:
    gen_hoffman: float
    gen_hoffman_best_m: int
    weaker: float
    conjecture: float
    degenerate: tuple[str, ...] = ()


@dataclass
class BoundReport:
    graph_id: str
    n: int
    m: int
    hoffman: float
    gen_hoffman: float
    gen_hoffman_best_m: int
    weaker: float
    conjecture: float
    cvetkovic: float
    myers_liu: float
    edwards_elphick: float
    bollobas_nikiforov: float
    wilf_upper: float
    mu_max: float
    mu_min: float
    s_plus: float
    s_minus: float
    inertia: tuple[int, int, int]
    alpha: int | None = None
    alpha_bound: float | None = None
    barnes: float | None = None
    chi_exact: int | None = None
    chi_lower: int | None = None
    chi_upper: int | None = None
    weighted: WeightedBounds | None = None
    degenerate: tuple[str, ...] = field(default_factory=tuple)

    def lower_bounds(self) -> dict[str, float]:
        """Proven lower bounds on chi carried by this report (the conjecture excluded)."""
        out = {
            "hoffman": self.hoffman,
            "gen_hoffman": self.gen_hoffman,
            "weaker": self.weaker,
            "cvetkovic": self.cvetkovic,
            "edwards_elphick": self.edwards_elphick,
        }
        if self.barnes is not None:
            out["barnes"] = self.barnes
        return out

    def as_dict(self) -> dict:
        return asdict(self)


def _has_negative(s: Spectrum) -> bool:
    return s.n > 0 and s.values[-1] < -s.zero_tol


def hoffman(s: Spectrum) -> float:
    """``1 + mu_1 / (-mu_n)``; 1 when the spectrum has no negative eigenvalue."""
    if not _has_negative(s):
        return 1.0
    return 1.0 + float(s.values[0]) / float(-s.values[-1])


def generalized_hoffman(s: Spectrum, config: Config = DEFAULT_CONFIG) -> tuple[float, int]:
    """Maximise ``sum(top m) / -sum(bottom m)`` over ``m = 1..n-1``.

    Returns ``(1 + best ratio, best m)``.  Ratios within ``tie_rel_tol`` of each
    other count as equal so the smallest maximising ``m`` wins; ``best_m`` is 0
    when every denominator is degenerate.
    """
    mu = s.values
    n = len(mu)
    if n < 2:
        return 1.0, 0
    top = np.cumsum(mu)[: n - 1]
    bottom = -np.cumsum(mu[::-1])[: n - 1]
    best, best_m = None, 0
    for m in range(1, n):
        den = bottom[m - 1]
        if den <= s.zero_tol:
            continue
        ratio = float(top[m - 1] / den)
        if best is None or ratio > best + config.tie_rel_tol * max(1.0, abs(best)):
            best, best_m = ratio, m
    if best is None:
        return 1.0, 0
    return 1.0 + best, best_m


def ratio_bounds(sums: SpectralSums, zero_tol: float) -> tuple[float, float]:
    """``(S+/S-, 1 + S+/S-)``; ``(0, 1)`` when ``S-`` is degenerate."""
    if sums.s_minus <= zero_tol:
        return 0.0, 1.0
    weaker = sums.s_plus / sums.s_minus
    return weaker, weaker + 1.0


def weaker_and_conjecture(s: Spectrum) -> tuple[float, float]:
    return ratio_bounds(spectral_sums(s, inertia_of(s)), s.zero_tol)


def auxiliary_bounds(s: Spectrum, n: int, m: int) -> AuxiliaryBounds:
    """Myers-Liu, Cvetkovic, Edwards-Elphick, Bollobas-Nikiforov and Wilf from ``mu_1, mu_2, n, m``."""
    if n < 1:
        raise InputError("auxiliary bounds need n >= 1")
    mu1 = float(s.values[0]) if s.n else 0.0
    mu2 = float(s.values[1]) if s.n > 1 else 0.0
    tol = s.zero_tol
    degenerate = []

    def ratio(name: str, num: float, den: float) -> float:
        if m == 0 or den <= tol:
            degenerate.append(name)
            return 1.0
        return 1.0 + num / den

    myers_liu = ratio("myers_liu", 2.0 * m, n * n - 2.0 * m)
    cvetkovic = ratio("cvetkovic", mu1, n - mu1)
    edwards_elphick = ratio("edwards_elphick", mu1**2, 2.0 * m - mu1**2)
    bollobas = ratio("bollobas_nikiforov", mu1**2 + mu2**2, 2.0 * m - mu1**2 - mu2**2)
    return AuxiliaryBounds(cvetkovic, myers_liu, edwards_elphick, bollobas, 1.0 + mu1, tuple(degenerate))


def alpha_bound(g: Graph, alpha: int) -> float:
    """``n - alpha + 1``, an upper bound on chi."""
    if not 0 <= alpha <= g.n:
        raise InputError(f"independence number {alpha} out of range for n={g.n}")
    return float(g.n - alpha + 1)


_BARNES_FACTORS = (0.8, 0.9, 1.1, 1.25)


def _barnes_objective(a: np.ndarray, d: np.ndarray, config: Config) -> float | None:
    """``mu_1(D^-1/2 A D^-1/2)`` or None when ``A + D`` is not PSD.

    ``A + D >= 0`` iff ``D^-1/2 A D^-1/2 + I >= 0``, so one spectrum answers both.
    """
    r = 1.0 / np.sqrt(d)
    b = a * r[:, None] * r[None, :]
    mu = eig_symmetric(b, config).values
    # zero_tol for A+D measured in the scaled frame
    if mu[-1] < -1.0 - config.zero_tol_factor * len(d) * max(1.0, float(np.max(np.abs(b)))):
        return None
    return float(mu[0])


def barnes_heuristic(a: np.ndarray, s: Spectrum, config: Config = DEFAULT_CONFIG,
                     max_sweeps: int = 50) -> float:
    """Feasibility-checked hill climb over diagonal ``D`` for ``1 + mu_1(D^-1/2 A D^-1/2)``.

    Starts at ``D = -mu_n I`` (the Hoffman point) and tries multiplying one
    coordinate of ``D`` at a time by each of 0.8, 0.9, 1.1, 1.25, accepting a
    move when ``A + D`` stays PSD and the objective strictly improves.
    """
    if not _has_negative(s):
        return 1.0
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    d = np.full(n, -float(s.values[-1]))
    best = float(s.values[0]) / d[0]
    for _ in range(max_sweeps):
        improved = False
        for k in range(n):
            for f in _BARNES_FACTORS:
                trial = d.copy()
                trial[k] *= f
                val = _barnes_objective(a, trial, config)
                if val is not None and val > best * (1 + 1e-12):
                    d, best, improved = trial, val, True
        if not improved:
            break
    return 1.0 + best


def weighted_bounds(w: np.ndarray, g: Graph, config: Config = DEFAULT_CONFIG) -> WeightedBounds:
    """Generalised Hoffman and S+/S- ratio on the spectrum of ``W*A``."""
    w = as_weight_matrix(w, g.n)
    b = schur_product(w, adjacency_matrix(g))
    s = eig_symmetric(b, config)
    gh, best_m = generalized_hoffman(s, config)
    weaker, conj = weaker_and_conjecture(s)
    degenerate = ("weighted",) if not _has_negative(s) else ()
    return WeightedBounds(gh, best_m, weaker, conj, degenerate)


@dataclass
class WeightSearchResult:
    gen_hoffman: float
    gen_hoffman_best_m: int
    gen_hoffman_weights: np.ndarray
    weaker: float
    weaker_weights: np.ndarray
    evaluations: int


def optimize_w(g: Graph, budget: int, seed, step: float = 0.3, patience: int = 25,
               config: Config = DEFAULT_CONFIG) -> WeightSearchResult:
    """Random-restart hill climbing over edge-supported symmetric weights.

    The first candidate is the all-ones matrix ``J``.  Each step perturbs one
    edge weight by a Gaussian of scale ``step``; the walk follows improvements
    of ``gen_hoffman + weaker`` and restarts from a random positive weighting
    after ``patience`` rejected moves.  The best value of each bound is tracked
    separately with its own witness, and ``budget`` counts spectra evaluated.
    """
    if budget < 1:
        raise InputError("budget must be >= 1")
    rng = np.random.default_rng(seed)
    edges = g.edges - 1
    n = g.n

    def build(vals: np.ndarray) -> np.ndarray:
        w = np.ones((n, n))
        if len(edges):
            w[edges[:, 0], edges[:, 1]] = vals
            w[edges[:, 1], edges[:, 0]] = vals
        return w

    def score(vals: np.ndarray) -> WeightedBounds:
        return weighted_bounds(build(vals), g, config)

    current = np.ones(len(edges))
    cur = score(current)
    result = WeightSearchResult(cur.gen_hoffman, cur.gen_hoffman_best_m, build(current),
                                cur.weaker, build(current), 1)
    cur_obj = cur.gen_hoffman + cur.weaker
    stale = 0
    while result.evaluations < budget and len(edges):
        restart = stale >= patience
        if restart:
            candidate = rng.uniform(0.5, 1.5, size=len(edges))
        else:
            candidate = current.copy()
            candidate[rng.integers(len(edges))] += step * rng.standard_normal()
        wb = score(candidate)
        result.evaluations += 1
        if wb.gen_hoffman > result.gen_hoffman:
            result.gen_hoffman, result.gen_hoffman_best_m = wb.gen_hoffman, wb.gen_hoffman_best_m
            result.gen_hoffman_weights = build(candidate)
        if wb.weaker > result.weaker:
            result.weaker, result.weaker_weights = wb.weaker, build(candidate)
        obj = wb.gen_hoffman + wb.weaker
        if restart or obj > cur_obj:
            current, cur_obj, stale = candidate, obj, 0
        else:
            stale += 1
    return result


def compute_report(g: Graph, *, exact: bool = False, barnes: bool = False,
                   weights: np.ndarray | None = None, node_budget: int | None = None,
                   config: Config = DEFAULT_CONFIG) -> BoundReport:
    """Every bound for ``g``; ``exact`` adds chi and alpha from the branch-and-bound oracles."""
    a = adjacency_matrix(g)
    s = eig_symmetric(a, config)
    inertia = inertia_of(s)
    sums = spectral_sums(s, inertia)
    gh, best_m = generalized_hoffman(s, config)
    weaker, conj = ratio_bounds(sums, s.zero_tol)
    aux = auxiliary_bounds(s, g.n, g.m)
    degenerate = list(aux.degenerate)
    if not _has_negative(s):
        degenerate = ["hoffman", "gen_hoffman", "weaker", "conjecture"] + degenerate
    report = BoundReport(
        graph_id=g.name or f"graph:{g.n}:{g.m}",
        n=g.n,
        m=g.m,
        hoffman=hoffman(s),
        gen_hoffman=gh,
        gen_hoffman_best_m=best_m,
        weaker=weaker,
        conjecture=conj,
        cvetkovic=aux.cvetkovic,
        myers_liu=aux.myers_liu,
        edwards_elphick=aux.edwards_elphick,
        bollobas_nikiforov=aux.bollobas_nikiforov,
        wilf_upper=aux.wilf_upper,
        mu_max=s.mu_max,
        mu_min=s.mu_min,
        s_plus=sums.s_plus,
        s_minus=sums.s_minus,
        inertia=(inertia.positive, inertia.negative, inertia.zero),
        degenerate=tuple(degenerate),
    )
    if barnes:
        report.barnes = barnes_heuristic(a, s, config)
    if weights is not None:
        report.weighted = weighted_bounds(weights, g, config)
    if exact:
        from chromatic_bounds.exact import chromatic_number, independence_number

        budget = node_budget if node_budget is not None else config.node_budget
        chi = chromatic_number(g, budget)
        report.chi_lower, report.chi_upper = chi.lower, chi.upper
        report.chi_exact = chi.value
        alpha = independence_number(g, budget)
        if alpha.exact:
            report.alpha = alpha.value
            report.alpha_bound = alpha_bound(g, alpha.value)
    return report
