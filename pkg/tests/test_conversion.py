from __future__ import annotations

import numpy as np
import pytest

from chromatic_bounds.conversion import (
    build_unitaries,
    coloring_to_representation,
    fourier_matrix,
    hadamard_representation,
    OrthogonalRepresentation,
    pinch,
    pinching_check,
    representation_to_unitaries,
    unitarity_defect,
    verify_annihilation,
    verify_reversal,
)
from chromatic_bounds.errors import InputError
from chromatic_bounds.exact import Coloring, chromatic_number
from chromatic_bounds.graphs import adjacency_matrix, complete, cycle, generate, hadamard, petersen, random_weights
from chromatic_bounds.harness import DEFAULT_CORPUS

TOL = 1e-10


@pytest.mark.parametrize("c", range(2, 13))
def test_fourier_invariants(c):
    f = fourier_matrix(c)
    assert np.allclose(f @ f.conj().T, c * np.eye(c), atol=TOL)
    assert np.allclose(f.conj().T @ f, c * np.eye(c), atol=TOL)
    assert np.allclose(f[-1], 1, atol=TOL) and np.allclose(f[:, -1], 1, atol=TOL)


def test_unitaries_k2():
    u1, u2 = build_unitaries(Coloring((1, 2)), 2, complete(2))
    assert np.allclose(u1, np.diag([-1, 1]))
    assert np.allclose(u2, np.eye(2))


def test_unitaries_k3():
    omega = np.exp(2j * np.pi / 3)
    us = build_unitaries(Coloring((1, 2, 3)), 3, complete(3))
    assert np.allclose(us[0], np.diag([omega, omega**2, 1]))
    assert np.allclose(us[-1], np.eye(3))
    assert max(unitarity_defect(u) for u in us) <= TOL


def test_unitaries_reject_improper():
    with pytest.raises(InputError):
        build_unitaries(Coloring((1, 1)), 2, complete(2))


def test_annihilation_k2_zero():
    assert verify_annihilation(complete(2), None, Coloring((1, 2)), 2) == 0.0


def test_annihilation_petersen():
    g = petersen()
    phi = chromatic_number(g).witness
    assert verify_annihilation(g, None, phi) <= TOL
    for seed in range(3):
        assert verify_annihilation(g, random_weights(10, seed), phi) <= TOL


@pytest.mark.parametrize("g, phi", [(complete(2), (1, 2)), (cycle(5), (1, 2, 1, 2, 3)), (complete(4), (1, 2, 3, 4))])
def test_reversal(g, phi):
    assert verify_reversal(g, None, Coloring(phi)) <= TOL


@pytest.mark.parametrize("family", DEFAULT_CORPUS)
def test_annihilation_and_reversal_on_corpus(family):
    g = generate(family)
    phi = chromatic_number(g).witness
    for w in [None, random_weights(g.n, (7, 0))]:
        assert verify_annihilation(g, w, phi) <= TOL
        assert verify_reversal(g, w, phi) <= TOL


def test_extra_colors_still_annihilate():
    g = cycle(6)
    phi = chromatic_number(g).witness
    assert verify_annihilation(g, None, phi, c=5) <= TOL


def test_improper_coloring_diagnosed_and_sensitive():
    g = complete(3)
    bad = Coloring((1, 1, 3))
    with pytest.raises(InputError, match="monochromatic edge"):
        verify_annihilation(g, None, bad, 3)
    assert verify_annihilation(g, None, bad, 3, check=False) >= 1


def test_pinching_diagonal_input():
    phi = Coloring((1, 2, 1, 3))
    x = np.diag([1.0, 2.0, 3.0, 4.0])
    assert np.array_equal(pinch(x, phi, 3), x)
    assert pinching_check(x, phi) <= TOL


def test_pinching_weighted_adjacency_both_sides_zero():
    g = petersen()
    phi = chromatic_number(g).witness
    b = random_weights(10, 1) * adjacency_matrix(g)
    assert not pinch(b, phi, 3).any()
    assert pinching_check(b, phi) <= TOL


def test_pinching_shape_mismatch():
    with pytest.raises(InputError):
        pinching_check(np.eye(3), Coloring((1, 2)))


def test_coloring_representation_k2_k3():
    rep = coloring_to_representation(Coloring((1, 2)), 2, complete(2))
    assert np.allclose(rep.vectors, [[-1, 1], [1, 1]])
    assert rep.is_normalized() and rep.is_orthogonal_for(complete(2))
    rep3 = coloring_to_representation(Coloring((1, 2, 3)), 3, complete(3))
    assert rep3.is_orthogonal_for(complete(3))


@pytest.mark.parametrize("family", ["petersen", "wheel:6", "kneser:7:2", "barbell:4", "gnp:12:0.5:5"])
def test_coloring_representation_generic(family):
    g = generate(family)
    phi = chromatic_number(g).witness
    rep = coloring_to_representation(phi, phi.colors_used, g)
    assert rep.dimension == phi.colors_used
    assert rep.is_normalized() and rep.is_orthogonal_for(g)
    us, residual = representation_to_unitaries(rep, g)
    assert residual <= TOL
    built = build_unitaries(phi, phi.colors_used, g)
    assert all(np.allclose(a, b) for a, b in zip(us, built))


@pytest.mark.parametrize("N", [2, 4, 8, 12])
def test_hadamard_representation_orthogonal(N):
    rep = hadamard_representation(N)
    assert rep.dimension == N and rep.is_normalized()
    assert rep.max_edge_overlap(hadamard(N)) <= TOL


def test_hadamard_4_unitaries():
    us, residual = representation_to_unitaries(hadamard_representation(4), hadamard(4))
    assert len(us) == 4 and residual <= TOL


def test_hadamard_representation_odd_rejected():
    with pytest.raises(InputError):
        hadamard_representation(3)


def test_representation_k2_residual_zero():
    rep = coloring_to_representation(Coloring((1, 2)), 2)
    assert representation_to_unitaries(rep, complete(2))[1] == 0.0


def test_non_normalized_representation_rejected():
    rep = OrthogonalRepresentation(np.array([[1.0, 0.0], [0.0, 1.0]], dtype=complex))
    assert rep.is_orthogonal_for(complete(2))
    with pytest.raises(InputError):
        representation_to_unitaries(rep, complete(2))
