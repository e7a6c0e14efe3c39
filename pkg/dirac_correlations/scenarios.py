"""Closed-form oracles for the analysed field configurations.

Nothing here calls the generic trace pipeline: every quantity is evaluated
from its closed form so that the two can be compared. Each case fixes one
orthonormal frame, returned with the result as `ScenarioResult.config`:

* pseudoscalar: 𝒫 = 𝒫x̂.
* tensor / pseudotensor: 𝒫 = 𝒫x̂, B = B(cosθ, sinθ, 0), so ω_B = 𝒫B sinθ ẑ.
* pseudovector: 𝒫 = 𝒫x̂, W = W(cosθ, sinθ, 0).
* combined, W perpendicular: 𝒫 = 𝒫x̂, B = B(cosθ, sinθ, 0), W = ±Wẑ
  (+ is parallel to ω_B for sinθ > 0).
* combined, B perpendicular: 𝒫 = 𝒫x̂, W = W(cosθ, sinθ, 0), B = ±Bẑ.

Magnitudes B, 𝒫, W are taken non-negative; orientation is carried by the
angle or by the explicit ±1 argument.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from dirac_correlations._logger import _logger
from dirac_correlations._typing import Vector3
from dirac_correlations.ansatz import parity_sign
from dirac_correlations.constants import Tolerances
from dirac_correlations.exceptions import ConstraintViolated, DegenerateEnergy, OutOfRange, UnsupportedConfiguration
from dirac_correlations.potentials import PotentialConfig, as_vector

__all__ = [
    "ScenarioValidity",
    "ScenarioResult",
    "frame_pseudoscalar",
    "frame_tensor",
    "frame_pseudovector",
    "frame_combined_w_perp",
    "frame_combined_b_perp",
    "case_pseudoscalar",
    "printed_discord_pseudoscalar",
    "case_tensor_pseudoscalar",
    "case_pseudovector",
    "case_combined",
    "case_combined_w_perp",
    "case_combined_b_perp",
    "ur_limit_combined",
    "ur_limit_combined_a2",
    "critical_angle",
]


class ScenarioValidity(Enum):
    EXACT = "Exact"
    CONSTRAINT_VIOLATED = "ConstraintViolated"


@dataclass(frozen=True, eq=False)
class ScenarioResult:
    """Closed-form values of one case.

    Attributes:
        name: case name
        c1: first invariant
        c2: second invariant
        lam: energy λ of the selected branch
        bloch_a: spin Bloch vector a⃗₂ in the case frame
        a2: |a⃗₂|²
        measure: concurrence, or the geometric discord for the mixed pseudoscalar case
        concurrence: concurrence of the state
        validity: Exact for every returned result
        config: the frame configuration the closed forms describe
        printed_measure: alternative closed form kept for reference (pseudoscalar only)
    """

    name: str
    c1: float
    c2: float
    lam: float
    bloch_a: Vector3
    a2: float
    measure: float
    concurrence: float
    validity: ScenarioValidity
    config: PotentialConfig
    printed_measure: Optional[float] = None


def _energy(lam_sq: float, c1: float, n: int) -> float:
    if lam_sq <= Tolerances.degenerate_radicand * max(1.0, c1):
        raise DegenerateEnergy(f"λ² = {lam_sq:.3e}")
    return parity_sign(n) * float(np.sqrt(lam_sq))


def _in_plane(magnitude: float, theta: float) -> Vector3:
    return as_vector((magnitude * np.cos(theta), magnitude * np.sin(theta), 0.0))


def _along_z(value: float) -> Vector3:
    return as_vector((0.0, 0.0, value))


# frames


def frame_pseudoscalar(m: float, mu: float, P: float) -> PotentialConfig:
    return PotentialConfig(m=m, mu=mu, p=as_vector(P))


def frame_tensor(
    m: float, mu: float, kappa: float, B: float, P: float, theta: float, pseudotensor: bool = False
) -> PotentialConfig:
    """B in the xy-plane at angle θ from 𝒫; `kappa` is χ when `pseudotensor`"""
    couplings = {"chi": kappa} if pseudotensor else {"kappa": kappa}
    return PotentialConfig(m=m, mu=mu, p=as_vector(P), B=_in_plane(B, theta), **couplings)


def frame_pseudovector(m: float, mu: float, q: float, W: float, P: float, theta: float) -> PotentialConfig:
    return PotentialConfig(m=m, mu=mu, q=q, p=as_vector(P), W=_in_plane(W, theta))


def frame_combined_w_perp(
    m: float,
    mu: float,
    q: float,
    W: float,
    B: float,
    P: float,
    theta: float,
    orientation: int = 1,
    kappa: float = 1.0,
) -> PotentialConfig:
    return PotentialConfig(
        m=m, mu=mu, q=q, kappa=kappa, p=as_vector(P), B=_in_plane(B, theta), W=_along_z(orientation * W)
    )


def frame_combined_b_perp(
    m: float,
    mu: float,
    q: float,
    W: float,
    B: float,
    P: float,
    theta: float,
    orientation: int = 1,
    kappa: float = 1.0,
) -> PotentialConfig:
    return PotentialConfig(
        m=m, mu=mu, q=q, kappa=kappa, p=as_vector(P), W=_in_plane(W, theta), B=_along_z(orientation * B)
    )


# pseudoscalar only


def printed_discord_pseudoscalar(m: float, mu: float, P: float) -> float:
    """1/2 − √(1/4 − μ²𝒫²/λ⁴), λ² = 𝒫² + m² + μ².

    Vanishes at μ = 0 and peaks at 𝒫² = m² + μ². It pairs the parity Bloch
    vector with the spin-indexed correlations for 𝒫 along ẑ, so it is not the
    local-unitary invariant discord of the state; `case_pseudoscalar` reports
    that one as `measure`.
    """
    lam_sq = P**2 + m**2 + mu**2
    if lam_sq <= 0:
        raise DegenerateEnergy("𝒫 = m = μ = 0")
    return float(0.5 - np.sqrt(max(0.0, 0.25 - mu**2 * P**2 / lam_sq**2)))


def case_pseudoscalar(m: float, mu: float, P: float, n: int = 2) -> ScenarioResult:
    """Free particle plus a pseudoscalar potential: O = 0, rank-two mixed state.

    The concurrence is zero. The state is classical on the spin side
    (D₂ = 0) and its parity-side geometric discord is

        D₁ = min(𝒫², m² + μ²) / (4λ²),

    maximal at 𝒫² = m² + μ².
    """
    if P < 0:
        raise OutOfRange(f"𝒫 must be non-negative, got {P!r}")
    c1 = P**2 + m**2 + mu**2
    lam = _energy(c1, c1, n)
    discord = min(P**2, m**2 + mu**2) / (4 * c1)
    return ScenarioResult(
        name="pseudoscalar",
        c1=c1,
        c2=0.0,
        lam=lam,
        bloch_a=as_vector((0.0, 0.0, 0.0)),
        a2=0.0,
        measure=discord,
        concurrence=0.0,
        validity=ScenarioValidity.EXACT,
        config=frame_pseudoscalar(m, mu, P),
        printed_measure=printed_discord_pseudoscalar(m, mu, P),
    )


# tensor (or pseudotensor) plus pseudoscalar


def case_tensor_pseudoscalar(
    m: float,
    mu: float,
    kappa: float,
    B: float,
    P: float,
    theta: float,
    s: int = 1,
    n: int = 2,
    pseudotensor: bool = False,
) -> ScenarioResult:
    """Tensor coupling κ (or pseudotensor χ) with pseudoscalar μ.

    Tensor: c₁ = 𝒫² + m² + μ² + κ²B², c₂ = κ²(m²B² + ω²), ω = 𝒫B sinθ and

        a⃗ = (−1)ˢ κ/√c₂ [−mB⃗ + (−1)ⁿ μ ω⃗/|λ|].

    The pseudotensor variant swaps m ↔ μ and κ → χ, with
    a⃗ = (−1)ˢ χ/√c₂ [μB⃗ + (−1)ⁿ m ω⃗/|λ|].
    """
    if B < 0 or P < 0:
        raise OutOfRange("B and 𝒫 must be non-negative")
    s_sign, n_sign = parity_sign(s), parity_sign(n)
    # the mass-like scale that pairs with B⃗ and the one that pairs with ω⃗
    paired, crossed = (mu, m) if pseudotensor else (m, mu)
    sin_t, cos_t = np.sin(theta), np.cos(theta)
    field = abs(kappa) * B
    omega = P * B * sin_t
    root = np.sqrt(paired**2 + P**2 * sin_t**2)
    c1 = P**2 + m**2 + mu**2 + field**2
    c2 = field**2 * root**2
    if c2 <= Tolerances.pure_c2:
        raise UnsupportedConfiguration("c2 = 0: the tensor term leaves O null")
    # λ² − crossed² = 𝒫²cos²θ + (R + (−1)ˢ|κ|B)², R² = paired² + 𝒫²sin²θ
    excess = (P * cos_t) ** 2 + (root + s_sign * field) ** 2
    lam_sq = crossed**2 + excess
    lam = _energy(lam_sq, c1, n)
    sqrt_c2 = field * root

    frame = frame_tensor(m, mu, kappa, B, P, theta, pseudotensor=pseudotensor)
    b_vec = frame.B
    omega_vec = _along_z(omega)
    if pseudotensor:
        a = s_sign * kappa / sqrt_c2 * (mu * b_vec + n_sign * m * omega_vec / abs(lam))
    else:
        a = s_sign * kappa / sqrt_c2 * (-m * b_vec + n_sign * mu * omega_vec / abs(lam))
    conc_sq = kappa**2 * omega**2 * excess / (c2 * lam_sq)
    concurrence = float(np.sqrt(np.clip(conc_sq, 0.0, 1.0)))
    return ScenarioResult(
        name="pseudotensor" if pseudotensor else "tensor",
        c1=c1,
        c2=c2,
        lam=lam,
        bloch_a=as_vector(a),
        a2=float(a @ a),
        measure=concurrence,
        concurrence=concurrence,
        validity=ScenarioValidity.EXACT,
        config=frame,
    )


# pseudovector plus pseudoscalar


def case_pseudovector(
    m: float,
    mu: float,
    q: float,
    W: float,
    P: float,
    theta: float,
    s: int = 1,
    n: int = 2,
) -> ScenarioResult:
    """Pseudovector (q, W⃗) with pseudoscalar μ and no tensor fields.

    With M² = m² + μ²:
    c₁ = 𝒫² + M² + q² + W², c₂ = q²𝒫² + (M² + q²)W² + (𝒫·W)² and

        a⃗ = −(−1)ˢ q𝒫⃗/√c₂ + (−1)ⁿ W⃗/|λ| + (−1)ˢ⁺ⁿ/(|λ|√c₂) [(M² + q²)W⃗ + (𝒫·W)𝒫⃗],

    valid when q = 0 or 𝒫 ⊥ W.

    Raises:
        ConstraintViolated: if q ≠ 0 and W⃗·𝒫⃗ ≠ 0
    """
    s_sign, n_sign = parity_sign(s), parity_sign(n)
    frame = frame_pseudovector(m, mu, q, W, P, theta)
    p_vec, w_vec = frame.P, frame.W
    p_dot_w = float(p_vec @ w_vec)
    if abs(q * p_dot_w) > Tolerances.constraint * max(1.0, abs(q) * abs(P) * abs(W)):
        raise ConstraintViolated(f"q = {q!r} with W·𝒫 = {p_dot_w:.6g}: needs q = 0 or W ⊥ 𝒫")
    mass_sq = m**2 + mu**2
    c1 = P**2 + mass_sq + q**2 + W**2
    c2 = q**2 * P**2 + (mass_sq + q**2) * W**2 + p_dot_w**2
    if c2 <= Tolerances.pure_c2:
        raise UnsupportedConfiguration("c2 = 0: O is null without a pseudovector field")
    sqrt_c2 = np.sqrt(c2)
    if q == 0:
        # λ² = 𝒫²sin²θ + (R + (−1)ˢW)², R = √(M² + 𝒫²cos²θ)
        root = np.sqrt(mass_sq + (P * np.cos(theta)) ** 2)
        lam_sq = (P * np.sin(theta)) ** 2 + (root + s_sign * W) ** 2
    else:
        lam_sq = c1 + 2 * s_sign * sqrt_c2
    lam = _energy(lam_sq, c1, n)
    a = (
        -s_sign * q * p_vec / sqrt_c2
        + n_sign * w_vec / abs(lam)
        + s_sign * n_sign / (abs(lam) * sqrt_c2) * ((mass_sq + q**2) * w_vec + p_dot_w * p_vec)
    )
    cross = np.cross(p_vec, w_vec)
    conc_sq = mass_sq * float(cross @ cross) / (c2 * lam_sq)
    concurrence = float(np.sqrt(np.clip(conc_sq, 0.0, 1.0)))
    return ScenarioResult(
        name="pseudovector",
        c1=c1,
        c2=c2,
        lam=lam,
        bloch_a=as_vector(a),
        a2=float(a @ a),
        measure=concurrence,
        concurrence=concurrence,
        validity=ScenarioValidity.EXACT,
        config=frame,
    )


# combined: tensor κ, pseudoscalar, pseudovector (χ = 0)


def case_combined(
    m: float,
    mu: float,
    q: float,
    W: Vector3,
    B: Vector3,
    P: Vector3,
    s: int = 1,
    n: int = 2,
    kappa: float = 1.0,
) -> ScenarioResult:
    """General combined case with χ = 0, requiring mκ W·B + q 𝒫·W = 0.

    c₁ = 𝒫² + m² + μ² + q² + W² + κ²B²
    c₂ = (mκB + q𝒫)² + (m² + μ² + q²)W² + 2μκ W·ω + κ²ω² + (𝒫·W)² + κ²(W·B)²
    a⃗ = −(−1)ˢ(mκB⃗ + q𝒫⃗)/√c₂ + (−1)ⁿW⃗/|λ|
         + (−1)ˢ⁺ⁿ/(|λ|√c₂)[(m² + μ² + q²)W⃗ + μκω⃗ + (𝒫·W)𝒫⃗ + κ²(W·B)B⃗]

    Raises:
        ConstraintViolated: if the constraint does not hold within tolerance
        UnsupportedConfiguration: if c₂ = 0
    """
    s_sign, n_sign = parity_sign(s), parity_sign(n)
    w_vec, b_vec, p_vec = as_vector(W), as_vector(B), as_vector(P)
    w_dot_b, p_dot_w = float(w_vec @ b_vec), float(p_vec @ w_vec)
    constraint = m * kappa * w_dot_b + q * p_dot_w
    scale = max(1.0, abs(m * kappa) * np.linalg.norm(w_vec) * np.linalg.norm(b_vec))
    scale = max(scale, abs(q) * np.linalg.norm(p_vec) * np.linalg.norm(w_vec))
    if abs(constraint) > Tolerances.constraint * scale:
        raise ConstraintViolated(f"m κ W·B + q 𝒫·W = {constraint:.6g}")

    omega = np.cross(p_vec, b_vec)
    mass_sq = m**2 + mu**2 + q**2
    lead = m * kappa * b_vec + q * p_vec
    spin_w = mu * w_vec + kappa * omega
    c1 = float(p_vec @ p_vec + m**2 + mu**2 + q**2 + w_vec @ w_vec + kappa**2 * b_vec @ b_vec)
    c2 = float(
        lead @ lead
        + m**2 * w_vec @ w_vec
        + spin_w @ spin_w
        + q**2 * w_vec @ w_vec
        + p_dot_w**2
        + kappa**2 * w_dot_b**2
    )
    if c2 <= Tolerances.pure_c2:
        raise UnsupportedConfiguration("c2 = 0: O is null at this point")
    sqrt_c2 = np.sqrt(c2)
    lam = _energy(c1 + 2 * s_sign * sqrt_c2, c1, n)
    bracket = mass_sq * w_vec + mu * kappa * omega + p_dot_w * p_vec + kappa**2 * w_dot_b * b_vec
    a = -s_sign * lead / sqrt_c2 + n_sign * w_vec / abs(lam) + s_sign * n_sign / (abs(lam) * sqrt_c2) * bracket
    a_sq = float(a @ a)
    concurrence = float(np.sqrt(np.clip(1.0 - a_sq, 0.0, 1.0)))
    _logger.debug("case_combined: c1=%.6g c2=%.6g a²=%.6g", c1, c2, a_sq)
    return ScenarioResult(
        name="combined",
        c1=c1,
        c2=c2,
        lam=lam,
        bloch_a=as_vector(a),
        a2=a_sq,
        measure=concurrence,
        concurrence=concurrence,
        validity=ScenarioValidity.EXACT,
        config=PotentialConfig(m=m, mu=mu, q=q, kappa=kappa, W=w_vec, B=b_vec, p=p_vec),
    )


def _from_frame(config: PotentialConfig, s: int, n: int) -> ScenarioResult:
    return case_combined(config.m, config.mu, config.q, config.W, config.B, config.P, s=s, n=n, kappa=config.kappa)


def case_combined_w_perp(
    m: float,
    mu: float,
    q: float,
    W: float,
    B: float,
    P: float,
    theta: float,
    s: int = 1,
    n: int = 2,
    orientation: int = 1,
    kappa: float = 1.0,
) -> ScenarioResult:
    """Combined case with W⃗ perpendicular to the (𝒫, B) plane; θ is the 𝒫–B angle.

    For m = q = 0, c₂ = (μW ± κ𝒫B sinθ)² (+ for W⃗ parallel to ω_B).
    """
    return _from_frame(frame_combined_w_perp(m, mu, q, W, B, P, theta, orientation, kappa), s, n)


def case_combined_b_perp(
    m: float,
    mu: float,
    q: float,
    W: float,
    B: float,
    P: float,
    theta: float,
    s: int = 1,
    n: int = 2,
    orientation: int = 1,
    kappa: float = 1.0,
) -> ScenarioResult:
    """Combined case with B⃗ perpendicular to the (𝒫, W) plane; θ is the 𝒫–W angle"""
    return _from_frame(frame_combined_b_perp(m, mu, q, W, B, P, theta, orientation, kappa), s, n)


def ur_limit_combined_a2(W: float, B: float, theta: float) -> float:
    """a² for 𝒫 → ∞ in the B-perpendicular frame: W²cos²θ / (B² + W²cos²θ)"""
    w_par = (W * np.cos(theta)) ** 2
    if w_par + B**2 == 0:
        raise OutOfRange("W and B cannot both vanish")
    return float(w_par / (B**2 + w_par))


def ur_limit_combined(W: float, B: float, theta: float) -> float:
    """Concurrence for 𝒫 → ∞: |B| / √(B² + W²cos²θ)"""
    w_par = (W * np.cos(theta)) ** 2
    if w_par + B**2 == 0:
        raise OutOfRange("W and B cannot both vanish")
    return float(abs(B) / np.sqrt(B**2 + w_par))


def critical_angle(mu: float, W: float, P: float, B: float) -> Optional[float]:
    """θ_c = arcsin(μW/𝒫B) where the combined-case Bloch modulus jumps.

    Returns:
        θ_c, or None when μW ≥ 𝒫B

    Raises:
        OutOfRange: if 𝒫·B ≤ 0
    """
    if P * B <= 0:
        raise OutOfRange("critical angle needs 𝒫B > 0")
    ratio = mu * W / (P * B)
    if ratio >= 1 or ratio <= -1:
        return None
    return float(np.arcsin(ratio))
