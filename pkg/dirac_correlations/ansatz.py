"""Stationary density-matrix ansatz.

For a traceless H̃ the square splits as H̃² = c₁I + 2O. When O² = c₂I the
commuting pair (O, H̃) yields the rank-one projectors

    ρ = (1/4)(I + (−1)ˢ O/√c₂)(I + (−1)ⁿ H̃/|λ|),   λ = (−1)ⁿ √(c₁ + 2(−1)ˢ √c₂),

and when O = 0 the rank-two state ρ = (1/4)(I + (−1)ⁿ H̃/|λ|) with λ² = c₁.
Both commute with H̃ and therefore solve the stationary Liouville equation.
"""
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

import numpy as np

from dirac_correlations._logger import _logger
from dirac_correlations._typing import ComplexMatrix
from dirac_correlations.clifford import build_gamma_set
from dirac_correlations.constants import INDICES, Tolerances
from dirac_correlations.exceptions import (
    DegenerateEnergy,
    NotTraceless,
    NumericalError,
    UnsupportedConfiguration,
)
from dirac_correlations.matcore import I4, commutator, dagger, frobenius_norm, hermitian_eigensystem
from dirac_correlations.potentials import DiracHamiltonian, PotentialConfig

__all__ = [
    "PurityClass",
    "AnsatzInputs",
    "AnsatzState",
    "parity_sign",
    "closed_form_invariants",
    "compute_invariants",
    "build_O",
    "purity_condition",
    "eigenvalue_lambda",
    "build_state",
    "quartic_residual",
    "all_branches",
    "check_state",
]


class PurityClass(Enum):
    PURE_PROJECTOR = "PureProjector"
    MIXED_RANK2 = "MixedRank2"
    UNSUPPORTED = "Unsupported"


def parity_sign(index: int) -> int:
    """(−1)^index for an ansatz index in {1, 2}"""
    if index not in INDICES:
        raise ValueError(f"ansatz index must be 1 or 2, got {index!r}")
    return -1 if index == 1 else 1


@dataclass(frozen=True)
class AnsatzInputs:
    hamiltonian: DiracHamiltonian
    s: int = 1
    n: int = 2

    def __post_init__(self):
        parity_sign(self.s)
        parity_sign(self.n)


@dataclass(frozen=True, eq=False)
class AnsatzState:
    """Density matrix built by the ansatz and its provenance.

    Attributes:
        rho: 4×4 density matrix
        c1: Tr[H̃²]/4
        c2: Tr[(H̃² − c₁I)²]/16
        delta: cross coefficient Δ; zero for every supported configuration
        lam: mean energy λ = Tr[H̃ρ]
        purity_class: PureProjector or MixedRank2
        s: index selecting the O eigenspace (inert for MixedRank2)
        n: index selecting the sign of the energy
    """

    rho: ComplexMatrix
    c1: float
    c2: float
    delta: float
    lam: float
    purity_class: PurityClass
    s: int
    n: int

    @property
    def purity(self) -> float:
        return float(np.real(np.trace(self.rho @ self.rho)))


def _reduced(h: DiracHamiltonian) -> ComplexMatrix:
    """H̃ = H − A⁰I₄, checked to be traceless"""
    matrix = h.matrix - h.config.A0 * I4 if h.includes_A0 else h.matrix
    trace = np.trace(matrix)
    if abs(trace) > Tolerances.traceless * max(1.0, frobenius_norm(matrix)):
        raise NotTraceless(f"Tr[H̃] = {trace:.3e}")
    return matrix


def _field_combinations(config: PotentialConfig):
    """Vectors of the O expansion: u (Σ), v (γ⁰Σ), w (iγ⁰γ₅Σ), r (−γ₅Σ)"""
    m, mu, q = config.m_eff, config.mu, config.q
    P, W = config.P, config.W
    b, k = config.B_chi, config.B_kappa
    u = mu * b - m * k - q * P
    v = m * W + np.cross(P, b)
    w = mu * W + np.cross(P, k)
    r = q * W + np.cross(b, k)
    return u, v, w, r


def closed_form_invariants(config: PotentialConfig) -> Tuple[float, float, float]:
    """(c₁, c₂, Δ) in closed form.

    c₁ = 𝒫² + m² + μ² + q² + W² + (κ² + χ²)B²  (with E: |B_χ|² + |B_κ|²)
    c₂ = [(μχ − mκ)B − q𝒫]² + [mW + χω]² + [μW + κω]² + q²W² + (𝒫·W)² + (κ² + χ²)(W·B)²
    Δ  = (μχ − mκ)(W·B) − q(𝒫·W)  (with E: u·W − 𝒫·(B_χ × B_κ))
    """
    P, W = config.P, config.W
    b, k = config.B_chi, config.B_kappa
    c1 = P @ P + config.m_eff**2 + config.mu**2 + config.q**2 + W @ W + b @ b + k @ k
    u, v, w, r = _field_combinations(config)
    c2 = u @ u + v @ v + w @ w + r @ r + (P @ W) ** 2 + (W @ k) ** 2 + (W @ b) ** 2
    delta = u @ W - P @ np.cross(b, k)
    return float(c1), float(c2), float(delta)


def compute_invariants(h: DiracHamiltonian) -> Tuple[float, float, float]:
    """Trace invariants of H̃.

    Returns:
        c1 = Tr[H̃²]/4, c2 = Tr[(H̃² − c₁I)²]/16 and the cross coefficient Δ = Tr[H̃³]/24

    Raises:
        NotTraceless: if Tr[H̃] exceeds tolerance
    """
    matrix = _reduced(h)
    square = matrix @ matrix
    c1 = float(np.real(np.trace(square))) / 4
    shifted = square - c1 * I4
    c2 = float(np.real(np.trace(shifted @ shifted))) / 16
    delta = float(np.real(np.trace(square @ matrix))) / 24
    return c1, c2, delta


def build_O(h: DiracHamiltonian) -> ComplexMatrix:
    """Explicit expansion of O = (H̃² − c₁I)/2:

        O = Σ·u + γ⁰Σ·v + iγ⁰γ₅Σ·w − γ₅Σ·r + (𝒫·W)γ₅ − (W·B_κ)γ⁰ + i(W·B_χ)γ⁰γ₅

    with u = μB_χ − mB_κ − q𝒫, v = mW + 𝒫×B_χ, w = μW + 𝒫×B_κ, r = qW + B_χ×B_κ.
    """
    _reduced(h)
    config = h.config
    gs = build_gamma_set()
    g0, g5 = gs.gamma[0], gs.gamma5
    u, v, w, r = _field_combinations(config)
    P, W = config.P, config.W
    return (
        gs.dot_sigma(u)
        + g0 @ gs.dot_sigma(v)
        + 1j * g0 @ g5 @ gs.dot_sigma(w)
        - g5 @ gs.dot_sigma(r)
        + (P @ W) * g5
        - (W @ config.B_kappa) * g0
        + 1j * (W @ config.B_chi) * g0 @ g5
    )


def _o_square_defect(o: ComplexMatrix) -> Tuple[float, float]:
    """(c₂ from O, ‖O² − c₂I‖_F)"""
    c2 = float(np.real(np.trace(o @ o))) / 4
    return c2, frobenius_norm(o @ o - c2 * I4)


def purity_condition(h: DiracHamiltonian) -> PurityClass:
    """Classify the configuration.

    PureProjector when O² = c₂I with c₂ > 0, MixedRank2 when O = 0,
    Unsupported otherwise.
    """
    o = build_O(h)
    c2, defect = _o_square_defect(o)
    if c2 > Tolerances.pure_c2 and defect <= Tolerances.pure_square * max(1.0, c2):
        result = PurityClass.PURE_PROJECTOR
    elif frobenius_norm(o) <= Tolerances.mixed_zero_o * max(1.0, compute_invariants(h)[0]):
        result = PurityClass.MIXED_RANK2
    else:
        result = PurityClass.UNSUPPORTED
    _logger.debug("purity_condition: c2=%.6g, ‖O² − c2 I‖=%.3e -> %s", c2, defect, result.value)
    return result


def eigenvalue_lambda(c1: float, c2: float, s: int, n: int) -> float:
    """λ = (−1)ⁿ √(c₁ + 2(−1)ˢ √c₂)

    Raises:
        DegenerateEnergy: if the radicand vanishes (the ansatz divides by |λ|)
    """
    radicand = c1 + 2 * parity_sign(s) * np.sqrt(max(c2, 0.0))
    if radicand <= Tolerances.degenerate_radicand * max(1.0, c1):
        raise DegenerateEnergy(f"c1 + 2(−1)^s √c2 = {radicand:.3e} for s={s}")
    return parity_sign(n) * float(np.sqrt(radicand))


def quartic_residual(h: DiracHamiltonian) -> float:
    """‖O² − c₂I − 2ΔH̃‖_F, the operator form of (λ² − c₁)²/4 = c₂ + 2Δλ"""
    matrix = _reduced(h)
    _, c2, delta = compute_invariants(h)
    o = build_O(h)
    return frobenius_norm(o @ o - c2 * I4 - 2 * delta * matrix)


def build_state(inputs: AnsatzInputs) -> AnsatzState:
    """Build the stationary ansatz state.

    Args:
        inputs: traceless Hamiltonian and the (s, n) indices

    Returns:
        AnsatzState

    Raises:
        UnsupportedConfiguration: if neither O² = c₂I (c₂ > 0) nor O = 0 holds
        DegenerateEnergy: if λ = 0 for the requested indices
    """
    h = inputs.hamiltonian
    matrix = _reduced(h)
    purity_class = purity_condition(h)
    if purity_class is PurityClass.UNSUPPORTED:
        raise UnsupportedConfiguration(
            f"O² ≠ c2·I (quartic residual {quartic_residual(h):.3e}); "
            "the ansatz needs a vanishing cross coefficient"
        )
    c1, c2, delta = compute_invariants(h)
    n_sign = parity_sign(inputs.n)

    if purity_class is PurityClass.MIXED_RANK2:
        lam = eigenvalue_lambda(c1, 0.0, inputs.s, inputs.n)
        rho = 0.25 * (I4 + n_sign * matrix / abs(lam))
    else:
        o = build_O(h)
        c2_o, _ = _o_square_defect(o)
        lam = eigenvalue_lambda(c1, c2, inputs.s, inputs.n)
        rho = 0.25 * (I4 + parity_sign(inputs.s) * o / np.sqrt(c2_o)) @ (I4 + n_sign * matrix / abs(lam))
    rho = 0.5 * (rho + dagger(rho))
    _logger.debug(
        "build_state: %s s=%s n=%s c1=%.6g c2=%.6g lambda=%.6g",
        purity_class.value,
        inputs.s,
        inputs.n,
        c1,
        c2,
        lam,
    )
    return AnsatzState(
        rho=rho,
        c1=c1,
        c2=c2,
        delta=delta,
        lam=lam,
        purity_class=purity_class,
        s=inputs.s,
        n=inputs.n,
    )


def all_branches(h: DiracHamiltonian) -> List[AnsatzState]:
    """States for every (s, n); branches with λ = 0 are skipped"""
    states = []
    for s in INDICES:
        for n in INDICES:
            try:
                states.append(build_state(AnsatzInputs(h, s=s, n=n)))
            except DegenerateEnergy as e:
                _logger.info("skip branch s=%s n=%s: %s", s, n, e)
    return states


def check_state(state: AnsatzState, h: DiracHamiltonian) -> None:
    """Verify the invariants of an ansatz state.

    Raises:
        NumericalError: naming the first invariant that does not hold
    """
    rho = state.rho
    matrix = _reduced(h)
    scale = max(1.0, frobenius_norm(matrix))
    checks = [
        ("Tr[ρ] = 1", abs(np.trace(rho) - 1.0), 1e-12),
        ("ρ = ρ†", frobenius_norm(rho - dagger(rho)), 1e-12),
        ("[H̃, ρ] = 0", frobenius_norm(commutator(matrix, rho)), 1e-11 * scale),
        ("Tr[H̃ρ] = λ", abs(np.trace(matrix @ rho) - state.lam), 1e-10 * max(1.0, abs(state.lam))),
    ]
    if state.purity_class is PurityClass.PURE_PROJECTOR:
        checks.append(("Tr[ρ²] = 1", abs(state.purity - 1.0), 1e-10))
    else:
        expected = 0.25 * (1 + state.c1 / state.lam**2)
        checks.append(("Tr[ρ²] = (1 + c1/λ²)/4", abs(state.purity - expected), 1e-10))
    for name, residual, tol in checks:
        if residual > tol:
            raise NumericalError(f"ansatz invariant `{name}` violated: residual {residual:.3e}")
    values, _ = hermitian_eigensystem(rho)
    if values[0] < -Tolerances.psd_clamp:
        raise NumericalError(f"ansatz state has eigenvalue {values[0]:.3e}")
