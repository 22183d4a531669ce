"""Central tolerance record.

Every numerical threshold used at runtime lives here so that callers (and the
CLI's ``--tol`` flag) can tighten or loosen them in one place.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields, replace


@dataclass(frozen=True)
class Config:
    # Jacobi eigensolver
    jacobi_rel_tol: float = 1e-12       # stop when off-diagonal Frobenius <= tol * ||A||_F
    jacobi_max_sweeps: int = 100
    symmetry_rel_tol: float = 1e-12     # max|A - A^T| <= tol * max|A|
    # eigenvalue sign classification: zero_tol = factor * n * max|a_kl|
    zero_tol_factor: float = 1e-8
    # eigen-residual: ||A v - mu v|| <= factor * n * max|a_kl|
    residual_factor: float = 1e-8
    # relative margin under which two generalized-Hoffman ratios count as tied
    tie_rel_tol: float = 1e-12
    # conversion identities (annihilation, reversal, pinching, Fourier)
    unitary_tol: float = 1e-10
    modulus_tol: float = 1e-12
    majorization_tol: float = 1e-8
    # verdicts: a bound exceeds chi (or mu_1) only by more than this
    verdict_tol: float = 1e-6
    # exact solvers
    node_budget: int = 10_000_000

    def with_overrides(self, overrides: dict[str, str | float | int]) -> "Config":
        known = {f.name: f.type for f in fields(self)}
        parsed = {}
        for key, value in overrides.items():
            if key not in known:
                raise KeyError(f"unknown tolerance {key!r}; known: {', '.join(sorted(known))}")
            current = getattr(self, key)
            parsed[key] = type(current)(float(value)) if isinstance(current, int) else float(value)
        return replace(self, **parsed)

    def as_dict(self) -> dict:
        return asdict(self)


DEFAULT_CONFIG = Config()
