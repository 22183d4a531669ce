"""Acceptance criteria, one test per criterion.

Each test records a ``PASS``/``FAIL`` line; ``conftest.py`` prints them in the
terminal summary, and ``python tests/test_acceptance.py`` prints them directly.
"""

from __future__ import annotations

import os
import time
from itertools import product

import numpy as np
import pytest

from chromatic_bounds import harness
from chromatic_bounds.bounds import compute_report
from chromatic_bounds.conversion import (
    hadamard_representation,
    pinching_check,
    representation_to_unitaries,
    verify_annihilation,
)
from chromatic_bounds.conversion import verify_reversal
from chromatic_bounds.exact import Coloring, chromatic_number
from chromatic_bounds.graphs import (
    adjacency_matrix,
    barbell,
    complete,
    complete_multipartite,
    generate,
    hadamard,
    petersen,
    random_weights,
)
from chromatic_bounds.linalg import (
    abs_matrix,
    eig_symmetric,
    eigen_residuals,
    is_majorized,
    random_symmetric,
    random_unitary,
    residual_tolerance,
    spectral_sums,
)

RESULTS: list[str] = []
JOBS = min(4, os.cpu_count() or 1)


def record(number: int, title: str, ok: bool, detail: str) -> None:
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} | {detail}")
    print(RESULTS[-1])
    assert ok, detail


def test_criterion_1_barbell():
    start = time.perf_counter()
    r = compute_report(barbell(8), exact=True)
    elapsed = time.perf_counter() - start
    ok = (abs(r.hoffman - 4.8) <= 0.05 and abs(r.gen_hoffman - 5.9) <= 0.05
          and abs(r.conjecture - 7.3) <= 0.05 and r.chi_exact == 8 and elapsed < 1.0)
    record(1, "Barbell(8) with bridge edge", ok,
           f"hoffman={r.hoffman:.4f} gen_hoffman={r.gen_hoffman:.4f} conjecture={r.conjecture:.4f} "
           f"chi={r.chi_exact} time={elapsed:.2f}s")


def test_criterion_2_random_graph_means():
    start = time.perf_counter()
    dense = harness.random_sweep(20, 0.9, 15, seed=7, jobs=JOBS)
    half = harness.random_sweep(50, 0.5, 15, seed=7, jobs=JOBS)
    elapsed = time.perf_counter() - start
    ok = (5.8 <= dense.mean_hoffman <= 6.8 and 7.7 <= dense.mean_conjecture <= 8.7
          and 4.0 <= half.mean_hoffman <= 5.0 and 2.7 <= half.mean_conjecture <= 3.7 and elapsed < 30)
    record(2, "G(n,p) means over 15 trials", ok,
           f"(20,0.9) hoffman={dense.mean_hoffman:.4f} conjecture={dense.mean_conjecture:.4f}; "
           f"(50,0.5) hoffman={half.mean_hoffman:.4f} conjecture={half.mean_conjecture:.4f}; time={elapsed:.1f}s")


def test_criterion_3_exactness_classes():
    cases = [(complete(n), n) for n in range(2, 11)]
    cases += [(complete_multipartite([a, b]), 2) for a, b in product(range(1, 6), repeat=2)]
    cases += [(complete_multipartite([r] * q), q) for q in range(1, 6) for r in range(1, 5)]
    worst, bad = 0.0, []
    for g, chi in cases:
        assert chromatic_number(g).value == chi
        err = abs(compute_report(g).conjecture - chi)
        worst = max(worst, err)
        if err > 1e-6:
            bad.append(g.name)
    record(3, "conjecture equals chi on complete / bipartite / regular multipartite", not bad,
           f"{len(cases)} graphs, max |conjecture - chi| = {worst:.2e}" + (f", failing {bad}" if bad else ""))


def test_criterion_4_conversion_suite():
    worst = 0.0
    checks = 0
    for spec in harness.DEFAULT_CORPUS:
        g = generate(spec)
        phi = chromatic_number(g).witness
        rng = np.random.default_rng((len(spec), g.n))
        weights = [None] + [random_weights(g.n, (seed, g.n)) for seed in range(20)]
        for w in weights:
            worst = max(worst, verify_annihilation(g, w, phi), verify_reversal(g, w, phi))
            x = adjacency_matrix(g) if w is None else w * adjacency_matrix(g)
            worst = max(worst, pinching_check(x, phi))
            checks += 3
        x = rng.standard_normal((g.n, g.n)) + 1j * rng.standard_normal((g.n, g.n))
        worst = max(worst, pinching_check(x, phi))
        checks += 1
    corrupted = verify_annihilation(complete(3), None, Coloring((1, 1, 3)), 3, check=False)
    record(4, "annihilation / reversal / pinching on the corpus", worst <= 1e-10 and corrupted >= 1,
           f"{checks} residuals, max={worst:.2e}; corrupted K3 residual={corrupted:.3f}")


def test_criterion_5_majorization_and_trace():
    maj_fail = trace_fail = 0
    margin = np.inf
    for seed in range(100):
        rng = np.random.default_rng(seed)
        n = 2 + seed % 11
        a, b = random_symmetric(n, rng), random_symmetric(n, rng)
        if not is_majorized(eig_symmetric(a + b).values, eig_symmetric(a).values + eig_symmetric(b).values, 1e-8):
            maj_fail += 1
    for seed in range(100):
        rng = np.random.default_rng(10_000 + seed)
        n = 2 + seed % 11
        a = random_symmetric(n, rng)
        u = random_unitary(n, rng)
        s = eig_symmetric(a)
        ua, ud = abs_matrix(s), u.conj().T
        lhs = 0.5 * np.trace(ua @ u @ (-a) @ ud).real + 0.5 * np.trace(ua @ ud @ (-a) @ u).real
        s_minus = spectral_sums(s).s_minus
        margin = min(margin, s_minus - lhs)
        if lhs > s_minus + 1e-8:
            trace_fail += 1
    record(5, "majorization of sums and the unitary trace inequality", maj_fail == 0 and trace_fail == 0,
           f"100 majorization pairs, {maj_fail} failures; 100 trace pairs, {trace_fail} failures, "
           f"min slack {margin:.3e}")


@pytest.mark.slow
def test_criterion_6_exhaustive_soundness():
    start = time.perf_counter()
    scan = harness.counterexample_scan("exhaustive:6", 0, seed=1, jobs=JOBS, keep_all=True, with_alpha=True)
    elapsed = time.perf_counter() - start
    problems = []
    for f in scan.findings:
        chi = f.chi_exact
        if chi is None:
            problems.append((f.graph_id, "chi unresolved"))
            continue
        if max(f.hoffman, f.gen_hoffman, f.weaker) > chi + 1e-6:
            problems.append((f.graph_id, "bound above chi"))
        if f.gen_hoffman < f.hoffman - 1e-12:
            problems.append((f.graph_id, "gen_hoffman below hoffman"))
        if 1 + f.mu_max < chi - 1e-6:
            problems.append((f.graph_id, "wilf"))
        spec = np.asarray(f.spectrum)
        tol = 1e-8 * max(f.n, 1)
        s_plus, s_minus = np.sum(spec[spec > tol] ** 2), np.sum(spec[spec < -tol] ** 2)
        if s_minus > 0 and f.n - f.alpha < s_plus / s_minus - 1e-9:
            problems.append((f.graph_id, "n - alpha"))
    ok = not problems and scan.violations == 0 and elapsed < 300
    record(6, "exhaustive soundness on all graphs with at most 6 vertices", ok,
           f"{scan.total} graphs, verdicts {scan.counts}, {len(problems)} problems, time={elapsed:.1f}s")


def test_criterion_7_hadamard():
    overlaps = {N: hadamard_representation(N).max_edge_overlap(hadamard(N)) for N in (2, 4, 8, 12)}
    chi = chromatic_number(hadamard(4))
    _, residual = representation_to_unitaries(hadamard_representation(4), hadamard(4))
    ok = all(v <= 1e-10 for v in overlaps.values()) and chi.value == 4 and residual <= 1e-10
    record(7, "Hadamard graph representations", ok,
           f"max edge overlap {max(overlaps.values()):.1e} for N in 2,4,8,12; chi(G_4)={chi.value}; "
           f"d=4 unitary residual={residual:.1e}")


def test_criterion_8_eigensolver_quality():
    worst = {"residual": 0.0, "orthonormality": 0.0, "trace": 0.0, "squares": 0.0}
    ok = True
    for spec in harness.DEFAULT_CORPUS:
        g = generate(spec)
        a = adjacency_matrix(g)
        s = eig_symmetric(a)
        tol = residual_tolerance(a)
        vals = {
            "residual": float(np.max(eigen_residuals(a, s))),
            "orthonormality": float(np.max(np.abs(s.vectors.T @ s.vectors - np.eye(g.n)))),
            "trace": abs(float(np.sum(s.values))),
            "squares": abs(float(np.sum(s.values**2)) - 2 * g.m),
        }
        ok &= all(v <= tol for v in vals.values())
        worst = {k: max(worst[k], vals[k]) for k in worst}
    pet = eig_symmetric(adjacency_matrix(petersen())).values
    pet_err = float(np.max(np.abs(pet - np.array([3] + [1] * 5 + [-2] * 4))))
    ok &= pet_err <= 1e-8
    record(8, "eigensolver quality on the corpus", bool(ok),
           ", ".join(f"{k} {v:.1e}" for k, v in worst.items()) + f"; Petersen error {pet_err:.1e}")


def test_criterion_9_counterexample_search():
    start = time.perf_counter()
    a = harness.counterexample_scan("gnp:10:0.85", 100, seed=3, jobs=JOBS)
    b = harness.counterexample_scan("gnp:10:0.9", 100, seed=3, jobs=JOBS)
    elapsed = time.perf_counter() - start
    ok = a.violations == 0 and b.violations == 0 and elapsed < 120
    record(9, "seeded G(10,0.85) and G(10,0.9) search", ok,
           f"p=0.85: {a.counts}; p=0.9: {b.counts}; time={elapsed:.1f}s")


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
