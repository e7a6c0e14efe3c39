"""Two-qubit correlation measures of 4×4 density matrices.

Factor 1 of the tensor product is intrinsic parity, factor 2 is spin.
Logarithms are base 2 throughout.
"""
import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

import numpy as np
from scipy.special import xlogy

from dirac_correlations._logger import _logger
from dirac_correlations._typing import ComplexMatrix, RealMatrix, Vector3
from dirac_correlations.constants import Tolerances
from dirac_correlations.exceptions import NotPure, OutOfRange
from dirac_correlations.matcore import (
    I2,
    PAULI,
    SIGMA_Y,
    general_eigenvalues,
    hermitian_eigensystem,
    kron,
    sqrt_psd,
)
from dirac_correlations.validator import matrix_pre_validator

__all__ = [
    "BlochDecomposition",
    "CorrelationReport",
    "bloch_decompose",
    "partial_trace",
    "purity",
    "is_pure",
    "concurrence_pure",
    "concurrence_wootters",
    "binary_entropy",
    "entanglement_of_formation",
    "von_neumann_entropy",
    "geometric_discord",
    "full_report",
]

_SPIN_FLIP = kron(SIGMA_Y, SIGMA_Y)
_LOG2 = np.log(2.0)


@dataclass(frozen=True, eq=False)
class BlochDecomposition:
    """ρ = (1/4)[I + (σ⃗⊗I)·a₁ + (I⊗σ⃗)·a₂ + Σ t_ij σ_i⊗σ_j]

    Attributes:
        a1: parity Bloch vector
        a2: spin Bloch vector
        T: correlation matrix, rows indexed by parity, columns by spin
    """

    a1: Vector3
    a2: Vector3
    T: RealMatrix

    @property
    def purity(self) -> float:
        """Tr[ρ²] = (1 + a₁² + a₂² + ‖T‖²)/4"""
        return float((1 + self.a1 @ self.a1 + self.a2 @ self.a2 + np.sum(self.T**2)) / 4)

    def reconstruct(self) -> ComplexMatrix:
        rho = np.eye(4, dtype=np.complex128)
        for i, s in enumerate(PAULI):
            rho = rho + self.a1[i] * kron(s, I2) + self.a2[i] * kron(I2, s)
            for j, t in enumerate(PAULI):
                rho = rho + self.T[i, j] * kron(s, t)
        return rho / 4


@dataclass(frozen=True)
class CorrelationReport:
    """Correlation measures of one state.

    Attributes:
        concurrence: Wootters concurrence
        eof: entanglement of formation
        entropy_total: S[ρ]
        entropy_sub1: S of the parity reduced state
        entropy_sub2: S of the spin reduced state
        discord_geo_1: geometric discord, measurement on the parity qubit
        discord_geo_2: geometric discord, measurement on the spin qubit
        purity: Tr[ρ²]
        concurrence_pure: √(1 − a²) when the state is pure, else None
    """

    concurrence: float
    eof: float
    entropy_total: float
    entropy_sub1: float
    entropy_sub2: float
    discord_geo_1: float
    discord_geo_2: float
    purity: float
    concurrence_pure: Optional[float] = None

    def dict(self) -> Dict[str, Any]:
        return asdict(self)


@matrix_pre_validator(shape=(4, 4), state=True)
def bloch_decompose(rho: ComplexMatrix) -> BlochDecomposition:
    """Local Bloch vectors and correlation matrix of a two-qubit state.

    Raises:
        NotAState: if ρ is not Hermitian with unit trace
    """
    a1 = np.array([np.real(np.trace(rho @ kron(s, I2))) for s in PAULI])
    a2 = np.array([np.real(np.trace(rho @ kron(I2, s))) for s in PAULI])
    t = np.array([[np.real(np.trace(rho @ kron(s, u))) for u in PAULI] for s in PAULI])
    return BlochDecomposition(a1=a1, a2=a2, T=t)


@matrix_pre_validator(shape=(4, 4), state=True)
def partial_trace(rho: ComplexMatrix, keep: int) -> ComplexMatrix:
    """Reduced 2×2 state of factor `keep` (1 parity, 2 spin)"""
    tensor = rho.reshape(2, 2, 2, 2)
    if keep == 1:
        return np.einsum("ijkj->ik", tensor)
    if keep == 2:
        return np.einsum("ijil->jl", tensor)
    raise ValueError(f"keep must be 1 or 2, got {keep!r}")


def purity(rho: ComplexMatrix) -> float:
    return float(np.real(np.trace(rho @ rho)))


def is_pure(rho: ComplexMatrix) -> bool:
    return purity(rho) >= 1 - Tolerances.pure_purity


def concurrence_pure(b: BlochDecomposition) -> float:
    """C = √(1 − a²) for a pure two-qubit state.

    Raises:
        NotPure: if the decomposition does not describe a pure state
    """
    if b.purity < 1 - Tolerances.pure_purity:
        raise NotPure(f"Tr[ρ²] = {b.purity:.12g}")
    a1_sq, a2_sq = float(b.a1 @ b.a1), float(b.a2 @ b.a2)
    if abs(a1_sq - a2_sq) > Tolerances.pure_bloch:
        raise NotPure(f"|a1|² = {a1_sq:.12g} differs from |a2|² = {a2_sq:.12g}")
    return float(np.sqrt(np.clip(1.0 - a2_sq, 0.0, 1.0)))


@matrix_pre_validator(shape=(4, 4), state=True)
def concurrence_wootters(rho: ComplexMatrix) -> float:
    """Wootters concurrence max(λ₁ − λ₂ − λ₃ − λ₄, 0).

    λ_k are the decreasing square roots of the eigenvalues of ρρ̃ with
    ρ̃ = (σy⊗σy)ρ*(σy⊗σy). They are taken from the Hermitian similar form
    √ρ ρ̃ √ρ; the non-Hermitian product is evaluated as a cross-check only,
    it splits by √ε when it is nilpotent (separable pure states).

    Raises:
        NotAState: if ρ is not a density matrix
    """
    rho_tilde = _SPIN_FLIP @ rho.conj() @ _SPIN_FLIP
    root = sqrt_psd(rho)
    product = root @ rho_tilde @ root
    values, _ = hermitian_eigensystem(0.5 * (product + product.conj().T))
    values = np.where(values < Tolerances.wootters_floor, 0.0, values)
    lam = np.sqrt(values)[::-1]
    concurrence = float(np.clip(lam[0] - lam[1] - lam[2] - lam[3], 0.0, 1.0))

    if _logger.isEnabledFor(logging.DEBUG):
        direct = general_eigenvalues(rho @ rho_tilde)
        if np.max(np.abs(direct.imag)) > Tolerances.wootters_imag:
            _logger.debug("ρρ̃ spectrum has imaginary parts up to %.3e", np.max(np.abs(direct.imag)))
    return concurrence


def binary_entropy(x: float) -> float:
    """−x log₂x − (1−x) log₂(1−x) with 0·log 0 = 0"""
    if not 0.0 <= x <= 1.0:
        raise OutOfRange(f"binary entropy argument {x!r} outside [0, 1]")
    return float(-(xlogy(x, x) + xlogy(1 - x, 1 - x)) / _LOG2)


def entanglement_of_formation(concurrence: float) -> float:
    """E = ℰ[(1 − √(1 − C²))/2]

    Raises:
        OutOfRange: if C is outside [0, 1]
    """
    if not 0.0 <= concurrence <= 1.0:
        raise OutOfRange(f"concurrence {concurrence!r} outside [0, 1]")
    return binary_entropy((1 - np.sqrt(1 - concurrence**2)) / 2)


@matrix_pre_validator(state=True)
def von_neumann_entropy(rho: ComplexMatrix) -> float:
    """−Tr[ρ log₂ρ] of a 4×4 state or a 2×2 reduced state"""
    values, _ = hermitian_eigensystem(rho)
    values = values[values > Tolerances.entropy_floor]
    return float(max(0.0, -np.sum(xlogy(values, values)) / _LOG2))


def geometric_discord(b: BlochDecomposition, side: int) -> float:
    """D = (1/4)(a² + ‖T‖² − k_max), measurement on qubit `side`.

    k_max is the largest eigenvalue of a aᵀ + T Tᵀ with a and the rows of T
    belonging to the measured qubit.
    """
    if side == 1:
        a, t = b.a1, b.T
    elif side == 2:
        a, t = b.a2, b.T.T
    else:
        raise ValueError(f"side must be 1 or 2, got {side!r}")
    k = np.outer(a, a) + t @ t.T
    k_max = np.linalg.eigvalsh(k)[-1]
    return float(max(0.0, (a @ a + np.sum(t**2) - k_max) / 4))


def full_report(rho: ComplexMatrix) -> CorrelationReport:
    """Every measure of `CorrelationReport` for one state"""
    b = bloch_decompose(rho)
    concurrence = concurrence_wootters(rho)
    rho_purity = purity(np.asarray(rho, dtype=np.complex128))
    pure_value = None
    if rho_purity >= 1 - Tolerances.pure_purity:
        pure_value = concurrence_pure(b)
        if abs(pure_value**2 - concurrence**2) > 1e-8:
            _logger.warning(
                "pure-state concurrence %.12g disagrees with Wootters %.12g",
                pure_value,
                concurrence,
            )
    return CorrelationReport(
        concurrence=concurrence,
        eof=entanglement_of_formation(concurrence),
        entropy_total=von_neumann_entropy(rho),
        entropy_sub1=von_neumann_entropy(partial_trace(rho, 1)),
        entropy_sub2=von_neumann_entropy(partial_trace(rho, 2)),
        discord_geo_1=geometric_discord(b, 1),
        discord_geo_2=geometric_discord(b, 2),
        purity=rho_purity,
        concurrence_pure=pure_value,
    )
