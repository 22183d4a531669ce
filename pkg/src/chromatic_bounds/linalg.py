"""Dense symmetric eigensolver, spectral summaries, majorization and complex helpers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from chromatic_bounds.config import DEFAULT_CONFIG, Config
from chromatic_bounds.errors import InputError, NumericalError


@dataclass(frozen=True)
class Spectrum:
    """Eigenpairs of a real symmetric matrix, values non-increasing.

    ``vectors[:, i]`` is the unit eigenvector for ``values[i]``.
    """

    values: np.ndarray
    vectors: np.ndarray
    zero_tol: float
    sweeps: int = 0

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def mu_max(self) -> float:
        return float(self.values[0]) if self.n else 0.0

    @property
    def mu_min(self) -> float:
        return float(self.values[-1]) if self.n else 0.0


@dataclass(frozen=True)
class Inertia:
    positive: int
    negative: int
    zero: int


@dataclass(frozen=True)
class SpectralSums:
    s_plus: float
    s_minus: float
    energy_half: float


@lru_cache(maxsize=256)
def _round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Disjoint-pair schedule covering every (p, q), p < q, once per sweep (circle method)."""
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        ps, qs = [], []
        for i in range(size // 2):
            a, b = players[i], players[size - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0]] + [players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def jacobi_eigen(a: np.ndarray, rel_tol: float = 1e-12, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray, int]:
    """Cyclic Jacobi rotations on a dense symmetric matrix.

    Each sweep annihilates every off-diagonal pair once, grouped into rounds of
    disjoint pairs so a whole round is applied as one vectorised rotation.
    Returns ``(diagonal, V, sweeps)`` with ``A = V diag V^T``; eigenvalues are unsorted.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    target = rel_tol * float(np.linalg.norm(a))
    rounds = _round_robin(n)
    for sweep in range(max_sweeps + 1):
        off = _off_norm(a)
        if off <= target:
            return np.diag(a).copy(), v, sweep
        if sweep == max_sweeps:
            break
        for p, q in rounds:
            apq = a[p, q]
            live = apq != 0.0
            if not live.any():
                continue
            p, q, apq = p[live], q[live], apq[live]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            big = np.abs(theta) > 1e150
            safe = np.where(big, 0.0, theta)
            t = np.where(
                big,
                0.5 / np.where(big, theta, 1.0),
                np.where(safe >= 0, 1.0, -1.0) / (np.abs(safe) + np.sqrt(safe * safe + 1.0)),
            )
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rp, rq = a[p, :], a[q, :]
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, p], a[:, q]
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            a[p, q] = 0.0
            a[q, p] = 0.0
            vp, vq = v[:, p], v[:, q]
            v[:, p] = vp * c - vq * s
            v[:, q] = vp * s + vq * c
    raise NumericalError(
        f"Jacobi did not converge in {max_sweeps} sweeps: off-diagonal norm {off:.3e} > target {target:.3e}"
    )


def zero_tolerance(a: np.ndarray, config: Config = DEFAULT_CONFIG) -> float:
    a = np.asarray(a)
    return config.zero_tol_factor * a.shape[0] * (float(np.max(np.abs(a))) if a.size else 0.0)


def eig_symmetric(a: np.ndarray, config: Config = DEFAULT_CONFIG) -> Spectrum:
    """Eigendecomposition of a real symmetric matrix, values sorted non-increasingly."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"expected a square matrix, got shape {a.shape}")
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    asym = float(np.max(np.abs(a - a.T))) if a.size else 0.0
    if asym > config.symmetry_rel_tol * scale:
        raise InputError(f"matrix is not symmetric: max|A - A^T| = {asym:.3e}")
    a = 0.5 * (a + a.T)
    values, vectors, sweeps = jacobi_eigen(a, config.jacobi_rel_tol, config.jacobi_max_sweeps)
    order = np.argsort(-values, kind="stable")
    return Spectrum(values[order], vectors[:, order], zero_tolerance(a, config), sweeps)


def eigenvalues(a: np.ndarray, config: Config = DEFAULT_CONFIG) -> np.ndarray:
    return eig_symmetric(a, config).values


def inertia_of(s: Spectrum) -> Inertia:
    pos = int(np.sum(s.values > s.zero_tol))
    neg = int(np.sum(s.values < -s.zero_tol))
    return Inertia(pos, neg, s.n - pos - neg)


def spectral_sums(s: Spectrum, inertia: Inertia | None = None) -> SpectralSums:
    inertia = inertia or inertia_of(s)
    pos = s.values[: inertia.positive]
    neg = s.values[s.n - inertia.negative:]
    return SpectralSums(float(np.sum(pos**2)), float(np.sum(neg**2)), float(np.sum(pos)))


def eigen_residuals(a: np.ndarray, s: Spectrum) -> np.ndarray:
    """``||A v_i - mu_i v_i||_2`` per eigenpair."""
    a = np.asarray(a, dtype=float)
    return np.linalg.norm(a @ s.vectors - s.vectors * s.values, axis=0)


def residual_tolerance(a: np.ndarray, config: Config = DEFAULT_CONFIG) -> float:
    a = np.asarray(a)
    return config.residual_factor * a.shape[0] * (float(np.max(np.abs(a))) if a.size else 0.0)


def abs_matrix(s: Spectrum) -> np.ndarray:
    """``|A| = sum_i |mu_i| v_i v_i^T`` from a computed spectrum."""
    return (s.vectors * np.abs(s.values)) @ s.vectors.T


# --- majorization ----------------------------------------------------------

def is_majorized(x, y, tol: float = 1e-8) -> bool:
    """True when ``x`` is majorized by ``y``: descending partial sums of ``x`` never
    exceed those of ``y`` (for ``m = 1..n-1``) and the totals agree, all within ``tol``."""
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.shape != y.shape:
        raise InputError(f"length mismatch: {len(x)} vs {len(y)}")
    if x.size == 0:
        return True
    px = np.cumsum(np.sort(x)[::-1])
    py = np.cumsum(np.sort(y)[::-1])
    if abs(px[-1] - py[-1]) > tol:
        return False
    return bool(np.all(px[:-1] <= py[:-1] + tol))


# --- complex matrix kit ----------------------------------------------------

def _square(x) -> np.ndarray:
    x = np.asarray(x, dtype=complex)
    if x.ndim != 2:
        raise InputError(f"expected a matrix, got shape {x.shape}")
    return x


def multiply(a, b) -> np.ndarray:
    a, b = _square(a), _square(b)
    if a.shape[1] != b.shape[0]:
        raise InputError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    return _square(a).conj().T


def diag_from(vector) -> np.ndarray:
    return np.diag(np.asarray(vector, dtype=complex).ravel())


def max_abs_norm(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def random_unitary(n: int, rng: np.random.Generator, real: bool = False) -> np.ndarray:
    """Haar-distributed unitary (or orthogonal when ``real``) via phase-fixed QR."""
    z = rng.standard_normal((n, n))
    if not real:
        z = (z + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_symmetric(n: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((n, n))
    return (z + z.T) / 2.0


def unitary_stochastic(s: Spectrum, u: np.ndarray) -> np.ndarray:
    """``c_ij = |v_i^dagger U v_j|^2`` for the eigenbasis of ``s``; doubly stochastic for unitary ``U``."""
    m = s.vectors.conj().T @ u @ s.vectors
    return np.abs(m) ** 2
