import numpy as np
import pytest
from tests.fixtures import SEED

from dirac_correlations.clifford import (
    METRIC,
    build_gamma_basis,
    build_gamma_set,
    decompose_in_basis,
    reconstruct,
    sigma_munu,
)
from dirac_correlations.matcore import I2, I4, PAULI, SIGMA_X, SIGMA_Z, anticommutator, dagger, kron
from dirac_correlations.potentials import PotentialConfig, build_hamiltonian


def test_clifford_algebra():
    gamma = build_gamma_set().gamma
    for mu in range(4):
        for nu in range(4):
            assert np.allclose(anticommutator(gamma[mu], gamma[nu]), 2 * METRIC[mu, nu] * I4)


def test_gamma5():
    gs = build_gamma_set()
    assert np.allclose(gs.gamma5, kron(SIGMA_X, I2))
    assert np.allclose(gs.gamma5 @ gs.gamma5, I4)
    for g in gs.gamma:
        assert np.allclose(anticommutator(gs.gamma5, g), 0)


def test_dirac_representation():
    gs = build_gamma_set()
    assert np.allclose(gs.beta, kron(SIGMA_Z, I2))
    for alpha, sigma, s in zip(gs.alpha, gs.sigma, PAULI):
        assert np.allclose(alpha, kron(SIGMA_X, s))
        assert np.allclose(sigma, kron(I2, s))


def test_gamma_read_only():
    with pytest.raises(ValueError):
        build_gamma_set().beta[0, 0] = 0


def test_sigma_munu_antisymmetric():
    assert np.allclose(sigma_munu(1, 2), -sigma_munu(2, 1))
    assert np.allclose(sigma_munu(3, 3), 0)


def test_basis_orthogonal():
    basis = build_gamma_basis()
    assert len(basis) == 16
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            assert np.isclose(np.trace(dagger(a) @ b), 4 if i == j else 0)


def test_basis_labels():
    basis = build_gamma_basis()
    assert basis.labels[0] == "I"
    assert basis.index("gamma5") == 5
    assert basis.index("sigma23") == 15
    assert np.allclose(basis[basis.index("gamma0")], build_gamma_set().beta)


def test_decompose_hamiltonian():
    h = build_hamiltonian(PotentialConfig(m=1.0, mu=2.0, p=(3.0, 0.0, 0.0)))
    x = decompose_in_basis(h.matrix)
    basis = build_gamma_basis()
    expected = np.zeros(16, dtype=np.complex128)
    expected[basis.index("gamma0")] = 1.0
    expected[basis.index("sigma01")] = -3j
    expected[basis.index("gamma5gamma0")] = -2j
    assert np.allclose(x, expected)


def test_reconstruct_random():
    rng = np.random.default_rng(SEED)
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert np.allclose(reconstruct(decompose_in_basis(m)), m)


def test_decompose_wrong_shape():
    with pytest.raises(ValueError):
        decompose_in_basis(I2)


def test_reconstruct_wrong_length():
    with pytest.raises(ValueError):
        reconstruct(np.zeros(4))
