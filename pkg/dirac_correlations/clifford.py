"""Dirac representation of the gamma matrices and the 16-element Γ basis.

Factor 1 of every Kronecker product is the intrinsic-parity qubit, factor 2
the spin qubit:

    β = γ⁰ = σz⊗I,  α_i = σx⊗σ_i,  γ^i = βα_i = iσy⊗σ_i,
    γ₅ = iγ⁰γ¹γ²γ³ = σx⊗I,  Σ_i = I⊗σ_i.

The tensor group of the basis uses σ^{μν} = (i/2)[γ^μ, γ^ν]; the symmetric
product of two distinct gammas vanishes and cannot span anything.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Tuple

import numpy as np

from dirac_correlations._typing import ComplexMatrix
from dirac_correlations.matcore import I2, I4, PAULI, SIGMA_X, SIGMA_Z, dagger, kron
from dirac_correlations.validator import matrix_pre_validator

__all__ = [
    "METRIC",
    "GammaSet",
    "GammaBasis",
    "build_gamma_set",
    "build_gamma_basis",
    "sigma_munu",
    "decompose_in_basis",
    "reconstruct",
]

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

_TENSOR_PAIRS: Tuple[Tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _frozen(m: ComplexMatrix) -> ComplexMatrix:
    m = np.array(m, dtype=np.complex128)
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class GammaSet:
    """Gamma matrices in the Dirac representation.

    Attributes:
        gamma: γ⁰..γ³ (upper index, metric (+,−,−,−))
        gamma5: iγ⁰γ¹γ²γ³
        alpha: α_x, α_y, α_z
        beta: β = γ⁰
        sigma: spin operators Σ_i = diag(σ_i, σ_i)
    """

    gamma: Tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix, ComplexMatrix]
    gamma5: ComplexMatrix
    alpha: Tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix]
    beta: ComplexMatrix
    sigma: Tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix]

    def dot_alpha(self, v: np.ndarray) -> ComplexMatrix:
        """α⃗·v⃗"""
        return sum(c * a for c, a in zip(v, self.alpha))  # type: ignore

    def dot_gamma(self, v: np.ndarray) -> ComplexMatrix:
        """γ⃗·v⃗ (spatial gammas)"""
        return sum(c * g for c, g in zip(v, self.gamma[1:]))  # type: ignore

    def dot_sigma(self, v: np.ndarray) -> ComplexMatrix:
        """Σ⃗·v⃗"""
        return sum(c * s for c, s in zip(v, self.sigma))  # type: ignore


@lru_cache(maxsize=None)
def build_gamma_set() -> GammaSet:
    """Build the gamma matrices. Entries are exactly 0, ±1, ±i."""
    beta = kron(SIGMA_Z, I2)
    alpha = tuple(kron(SIGMA_X, s) for s in PAULI)
    spatial = tuple(beta @ a for a in alpha)
    gamma5 = 1j * beta @ spatial[0] @ spatial[1] @ spatial[2]
    sigma = tuple(kron(I2, s) for s in PAULI)
    return GammaSet(
        gamma=(_frozen(beta),) + tuple(_frozen(g) for g in spatial),  # type: ignore
        gamma5=_frozen(gamma5),
        alpha=tuple(_frozen(a) for a in alpha),  # type: ignore
        beta=_frozen(beta),
        sigma=tuple(_frozen(s) for s in sigma),  # type: ignore
    )


def sigma_munu(mu: int, nu: int) -> ComplexMatrix:
    """σ^{μν} = (i/2)[γ^μ, γ^ν]"""
    g = build_gamma_set().gamma
    return 0.5j * (g[mu] @ g[nu] - g[nu] @ g[mu])


@dataclass(frozen=True)
class GammaBasis:
    """The 16 basis elements Γ₀..Γ₁₅.

    Order: I; γ⁰..γ³; γ₅; γ₅γ⁰..γ₅γ³; σ^{01}, σ^{02}, σ^{03}, σ^{12}, σ^{13}, σ^{23}.
    """

    elements: Tuple[ComplexMatrix, ...]
    labels: Tuple[str, ...]

    def __iter__(self) -> Iterator[ComplexMatrix]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, item: int) -> ComplexMatrix:
        return self.elements[item]

    def index(self, label: str) -> int:
        return self.labels.index(label)


@lru_cache(maxsize=None)
def build_gamma_basis() -> GammaBasis:
    gs = build_gamma_set()
    elements = [I4]
    labels = ["I"]
    for mu, g in enumerate(gs.gamma):
        elements.append(g)
        labels.append(f"gamma{mu}")
    elements.append(gs.gamma5)
    labels.append("gamma5")
    for mu, g in enumerate(gs.gamma):
        elements.append(gs.gamma5 @ g)
        labels.append(f"gamma5gamma{mu}")
    for mu, nu in _TENSOR_PAIRS:
        elements.append(sigma_munu(mu, nu))
        labels.append(f"sigma{mu}{nu}")
    return GammaBasis(elements=tuple(_frozen(e) for e in elements), labels=tuple(labels))


@matrix_pre_validator(shape=(4, 4))
def decompose_in_basis(m: ComplexMatrix) -> np.ndarray:
    """Coefficients x_i with m = Σ_i x_i Γ_i.

    x_i = Tr[Γ_i† m] / Tr[Γ_i† Γ_i]; every Γ_i is unitary so the
    denominator is 4.

    Returns:
        16 complex coefficients in basis order
    """
    basis = build_gamma_basis()
    return np.array(
        [np.trace(dagger(g) @ m) / np.trace(dagger(g) @ g) for g in basis],
        dtype=np.complex128,
    )


def reconstruct(coefficients: np.ndarray) -> ComplexMatrix:
    """Inverse of `decompose_in_basis`"""
    coefficients = np.asarray(coefficients, dtype=np.complex128)
    if coefficients.shape != (16,):
        raise ValueError(f"expected 16 coefficients, got shape {coefficients.shape}")
    return np.einsum("i,ijk->jk", coefficients, np.array(build_gamma_basis().elements))
