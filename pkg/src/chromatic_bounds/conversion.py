"""Diagonal-unitary conversion of ``W*A`` to the zero matrix.

Given a proper ``c``-coloring ``phi``, the diagonal unitaries
``U_s = diag(zeta^(phi(1) s), ..., zeta^(phi(n) s))`` with ``zeta = exp(2 pi i / c)``
satisfy ``sum_{s=1..c} U_s (W*A) U_s^dagger = 0``.  The functions here build
those unitaries, measure the residuals of that identity and its relatives,
and handle normalized orthogonal representations (modulus-one vectors that
are orthogonal across edges), including the Hadamard-graph representation.

Matrices are dense complex ``numpy`` arrays; indices are 1-based in the
mathematical sense (``F_c[j-1, k-1] = zeta^(j k)``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from chromatic_bounds.config import DEFAULT_CONFIG, Config
from chromatic_bounds.errors import InputError
from chromatic_bounds.exact import Coloring
from chromatic_bounds.graphs import Graph, adjacency_matrix, as_weight_matrix, hamming_vertex_bits, schur_product
from chromatic_bounds.linalg import adjoint, max_abs_norm


def roots_of_unity(c: int) -> np.ndarray:
    """``zeta^j`` for ``j = 0..c-1``, exact at quarter turns (so ``zeta^(c/2)`` is exactly -1)."""
    if c < 1:
        raise InputError(f"root order must be >= 1, got {c}")
    j = np.arange(c)
    z = np.exp(2j * np.pi * j / c)
    quarter = (4 * j) % c == 0
    z[quarter] = np.array([1, 1j, -1, -1j])[(4 * j[quarter]) // c]
    return z


def fourier_matrix(c: int) -> np.ndarray:
    """``(F_c)_{jk} = zeta^(j k)`` for ``j, k = 1..c``; last row and column are all ones."""
    if c < 1:
        raise InputError(f"Fourier matrix order must be >= 1, got {c}")
    j = np.arange(1, c + 1)
    return roots_of_unity(c)[np.outer(j, j) % c]


def _check_coloring(phi: Coloring, c: int, g: Graph | None) -> None:
    if c < 1:
        raise InputError(f"number of colors must be >= 1, got {c}")
    if g is not None:
        phi.check_proper(g, c)
    elif any(not 1 <= k <= c for k in phi.assignment):
        raise InputError(f"coloring uses colors outside 1..{c}")


def unitary_diagonals(phi: Coloring, c: int) -> np.ndarray:
    """Row ``s - 1`` holds the diagonal of ``U_s``: ``zeta^(phi(k) s)``; exponents reduced mod ``c``."""
    colors = np.asarray(phi.assignment, dtype=np.int64)
    s = np.arange(1, c + 1, dtype=np.int64)
    return roots_of_unity(c)[np.outer(s, colors) % c]


def build_unitaries(phi: Coloring, c: int, g: Graph | None = None) -> list[np.ndarray]:
    """The ``c`` diagonal unitaries of the conversion identity; ``U_c`` is the identity.

    Pass ``g`` to have ``phi`` checked for properness first.
    """
    _check_coloring(phi, c, g)
    return [np.diag(d) for d in unitary_diagonals(phi, c)]


def _conjugation_sum(diagonals: np.ndarray, x: np.ndarray, inverse: bool = False) -> np.ndarray:
    """``sum_s U_s X U_s^dagger`` (or with ``U_s^dagger`` in front) using diagonal structure."""
    d = diagonals.conj() if inverse else diagonals
    total = np.zeros(x.shape, dtype=complex)
    for row in d:
        total += row[:, None] * x * row.conj()[None, :]
    return total


def _weighted_adjacency(g: Graph, w: np.ndarray | None) -> np.ndarray:
    a = adjacency_matrix(g)
    if w is None:
        return a
    return schur_product(as_weight_matrix(w, g.n), a)


def verify_annihilation(g: Graph, w: np.ndarray | None, phi: Coloring, c: int | None = None,
                        check: bool = True) -> float:
    """Max-abs entry of ``sum_{s=1..c} U_s (W*A) U_s^dagger``, worst of the ``U_s`` and ``U_s^dagger`` variants.

    ``w=None`` means the all-ones weight matrix.  With ``check=False`` an
    improper coloring is accepted and the (nonzero) residual is returned.
    """
    c = c if c is not None else phi.colors_used
    _check_coloring(phi, c, g if check else None)
    b = _weighted_adjacency(g, w)
    diags = unitary_diagonals(phi, c)
    return max(max_abs_norm(_conjugation_sum(diags, b)), max_abs_norm(_conjugation_sum(diags, b, inverse=True)))


def verify_reversal(g: Graph, w: np.ndarray | None, phi: Coloring, c: int | None = None,
                    check: bool = True) -> float:
    """Max-abs entry of ``sum_{s=1..c-1} U_s (-W*A) U_s^dagger - W*A``, worst of both variants."""
    c = c if c is not None else phi.colors_used
    _check_coloring(phi, c, g if check else None)
    b = _weighted_adjacency(g, w)
    diags = unitary_diagonals(phi, c)[: c - 1]
    return max(
        max_abs_norm(_conjugation_sum(diags, -b) - b),
        max_abs_norm(_conjugation_sum(diags, -b, inverse=True) - b),
    )


def color_projectors(phi: Coloring, c: int) -> list[np.ndarray]:
    """``P_b``: diagonal 0/1 projector onto the vertices of color ``b``, ``b = 1..c``."""
    colors = np.asarray(phi.assignment)
    return [np.diag((colors == b).astype(float)) for b in range(1, c + 1)]


def pinch(x: np.ndarray, phi: Coloring, c: int) -> np.ndarray:
    """``sum_b P_b X P_b`` (keep only entries whose row and column share a color)."""
    colors = np.asarray(phi.assignment)
    same = colors[:, None] == colors[None, :]
    in_range = (colors >= 1) & (colors <= c)
    return np.where(same & in_range[:, None], x, 0)


def pinching_check(x: np.ndarray, phi: Coloring, c: int | None = None) -> float:
    """Max-abs entry of ``sum_s U_s X U_s^dagger - c sum_b P_b X P_b``."""
    c = c if c is not None else phi.colors_used
    _check_coloring(phi, c, None)
    x = np.asarray(x, dtype=complex)
    if x.shape != (len(phi.assignment),) * 2:
        raise InputError(f"X has shape {x.shape}, coloring covers {len(phi.assignment)} vertices")
    lhs = _conjugation_sum(unitary_diagonals(phi, c), x)
    rhs = c * sum(p @ x @ p for p in color_projectors(phi, c))
    return max_abs_norm(lhs - rhs)


# --- orthogonal representations --------------------------------------------

@dataclass(frozen=True)
class OrthogonalRepresentation:
    """Row ``k - 1`` of ``vectors`` is the ``d``-vector assigned to vertex ``k``."""

    vectors: np.ndarray

    @property
    def dimension(self) -> int:
        return self.vectors.shape[1]

    def is_normalized(self, tol: float = DEFAULT_CONFIG.modulus_tol) -> bool:
        return bool(np.all(np.abs(np.abs(self.vectors) - 1.0) <= tol))

    def max_edge_overlap(self, g: Graph, chunk: int = 1 << 16) -> float:
        """Largest ``|Psi(k)^dagger Psi(l)|`` over edges ``(k, l)``, 0 for edgeless graphs."""
        if self.vectors.shape[0] != g.n:
            raise InputError(f"representation has {self.vectors.shape[0]} vectors, graph has {g.n} vertices")
        worst = 0.0
        e = g.edges - 1
        for start in range(0, len(e), chunk):
            part = e[start:start + chunk]
            dots = np.einsum("ij,ij->i", self.vectors[part[:, 0]].conj(), self.vectors[part[:, 1]])
            worst = max(worst, float(np.max(np.abs(dots))))
        return worst

    def is_orthogonal_for(self, g: Graph, tol: float = DEFAULT_CONFIG.unitary_tol) -> bool:
        return self.max_edge_overlap(g) <= tol


def hadamard_representation(N: int) -> OrthogonalRepresentation:
    """``Psi(k) = ((-1)^k_1, ..., (-1)^k_N)`` on ``{0,1}^N``, using the vertex order of ``graphs.hadamard``."""
    if N < 2 or N % 2:
        raise InputError(f"Hadamard representation needs an even N >= 2, got {N}")
    bits = np.array([hamming_vertex_bits(k, N) for k in range(1, (1 << N) + 1)])
    return OrthogonalRepresentation((1 - 2 * bits).astype(complex))


def coloring_to_representation(phi: Coloring, c: int, g: Graph | None = None) -> OrthogonalRepresentation:
    """Assign column ``phi(k)`` of ``F_c`` to vertex ``k``."""
    _check_coloring(phi, c, g)
    f = fourier_matrix(c)
    cols = np.asarray(phi.assignment) - 1
    return OrthogonalRepresentation(f[:, cols].T.copy())


def representation_to_unitaries(rep: OrthogonalRepresentation, g: Graph,
                                config: Config = DEFAULT_CONFIG) -> tuple[list[np.ndarray], float]:
    """``U_s = diag(Psi(1)_s, ..., Psi(n)_s)`` for ``s = 1..d`` and the residual of ``sum_s U_s A U_s^dagger``."""
    if not rep.is_normalized(config.modulus_tol):
        raise InputError("representation is not normalized (entries must have modulus one)")
    if rep.vectors.shape[0] != g.n:
        raise InputError(f"representation has {rep.vectors.shape[0]} vectors, graph has {g.n} vertices")
    diags = rep.vectors.T
    residual = max_abs_norm(_conjugation_sum(diags, adjacency_matrix(g)))
    return [np.diag(d) for d in diags], residual


def unitarity_defect(u: np.ndarray) -> float:
    """``max|U U^dagger - I|``."""
    u = np.asarray(u, dtype=complex)
    return max_abs_norm(u @ adjoint(u) - np.eye(u.shape[0]))
