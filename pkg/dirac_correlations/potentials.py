"""External-field configurations and the interacting Dirac Hamiltonian.

All fields are constant and uniform; couplings are plain numbers in natural
units (ħ = c = 1).
"""
import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict

import numpy as np

from dirac_correlations._logger import _logger
from dirac_correlations._typing import ComplexMatrix, Self, Vector3
from dirac_correlations.clifford import build_gamma_set, sigma_munu
from dirac_correlations.matcore import I2, I4, PAULI, SIGMA_X, SIGMA_Y, SIGMA_Z, kron

__all__ = [
    "PotentialConfig",
    "DiracHamiltonian",
    "PoincareClass",
    "as_vector",
    "build_hamiltonian",
    "su2su2_form",
    "covariant_form",
    "hamiltonian_term",
    "su2su2_term",
    "field_tensor",
    "random_config",
]

_VECTOR_FIELDS = ("A", "W", "B", "E", "p")


def as_vector(value: Any) -> Vector3:
    """Convert a scalar (taken along x̂) or a 3-sequence to a read-only float vector"""
    arr = np.asarray(value, dtype=np.float64)
    if arr.ndim == 0:
        arr = np.array([float(arr), 0.0, 0.0])
    if arr.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {arr.shape}")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


def _zero() -> Vector3:
    return as_vector((0.0, 0.0, 0.0))


@dataclass(frozen=True, eq=False)
class PotentialConfig:
    """Couplings and fields entering H̃.

    Attributes:
        m: mass
        phi_S: scalar coupling, enters as m + phi_S
        mu: pseudoscalar coupling
        A0: time component of the vector potential
        A: vector potential
        q: time component of the pseudovector potential
        W: spatial pseudovector potential
        kappa: tensor (anomalous magnetic moment) coupling
        chi: pseudotensor (electric dipole) coupling
        B: magnetic field
        E: electric field
        p: canonical momentum
    """

    m: float = 0.0
    phi_S: float = 0.0
    mu: float = 0.0
    A0: float = 0.0
    A: Vector3 = field(default_factory=_zero)
    q: float = 0.0
    W: Vector3 = field(default_factory=_zero)
    kappa: float = 0.0
    chi: float = 0.0
    B: Vector3 = field(default_factory=_zero)
    E: Vector3 = field(default_factory=_zero)
    p: Vector3 = field(default_factory=_zero)

    def __post_init__(self):
        for name in _VECTOR_FIELDS:
            object.__setattr__(self, name, as_vector(getattr(self, name)))
        for name in ("m", "phi_S", "mu", "A0", "q", "kappa", "chi"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def m_eff(self) -> float:
        """m + φ_S, the mass entering every formula"""
        return self.m + self.phi_S

    @property
    def P(self) -> Vector3:
        """kinetic momentum 𝒫 = p − A"""
        return self.p - self.A

    @property
    def B_chi(self) -> Vector3:
        """χB + κE, the field multiplying iγ⃗"""
        return self.chi * self.B + self.kappa * self.E

    @property
    def B_kappa(self) -> Vector3:
        """κB − χE, the field multiplying γ₅γ⃗"""
        return self.kappa * self.B - self.chi * self.E

    @property
    def omega(self) -> Vector3:
        """ω_B = 𝒫 × B"""
        return np.cross(self.P, self.B)

    def replace(self, **changes: Any) -> Self:
        return dataclasses.replace(self, **changes)

    def scaled(self, factor: float) -> Self:
        """Multiply every energy-valued entry by `factor` (couplings κ, χ untouched)"""
        return self.replace(
            m=self.m * factor,
            phi_S=self.phi_S * factor,
            mu=self.mu * factor,
            A0=self.A0 * factor,
            A=self.A * factor,
            q=self.q * factor,
            W=self.W * factor,
            B=self.B * factor,
            E=self.E * factor,
            p=self.p * factor,
        )

    def dict(self) -> Dict[str, Any]:
        return {
            f.name: (getattr(self, f.name).tolist() if f.name in _VECTOR_FIELDS else getattr(self, f.name))
            for f in dataclasses.fields(self)
        }

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.dict().items())
        return f"{self.__class__.__name__}({args})"


@dataclass(frozen=True, eq=False)
class DiracHamiltonian:
    """A built Hamiltonian and the configuration it came from.

    Attributes:
        matrix: 4×4 Hermitian matrix
        config: source configuration
        includes_A0: False when A⁰I₄ was subtracted (the analysed H̃)
    """

    matrix: ComplexMatrix
    config: PotentialConfig
    includes_A0: bool = False

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=np.complex128)
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)


class PoincareClass(Enum):
    """Transformation class of a potential term"""

    SCALAR = "scalar"
    PSEUDOSCALAR = "pseudoscalar"
    VECTOR = "vector"
    PSEUDOVECTOR = "pseudovector"
    TENSOR = "tensor"
    PSEUDOTENSOR = "pseudotensor"


def field_tensor(E: Vector3, B: Vector3) -> np.ndarray:
    """Covariant F_{μν} with F_{0i} = E_i and F_{ij} = −ε_{ijk}B_k"""
    f = np.zeros((4, 4))
    f[0, 1:] = E
    f[1:, 0] = -np.asarray(E)
    f[1, 2], f[1, 3], f[2, 3] = -B[2], B[1], -B[0]
    f[2, 1], f[3, 1], f[3, 2] = B[2], -B[1], B[0]
    return f


def _half_sigma_f(E: Vector3, B: Vector3) -> ComplexMatrix:
    """(1/2)σ^{μν}F_{μν}"""
    f = field_tensor(E, B)
    out = np.zeros((4, 4), dtype=np.complex128)
    for mu in range(4):
        for nu in range(mu + 1, 4):
            out += sigma_munu(mu, nu) * f[mu, nu]
    return out


def covariant_form(config: PotentialConfig, cls: PoincareClass) -> ComplexMatrix:
    """Covariant potential matrix U of one Poincaré class (H gets γ⁰U)"""
    gs = build_gamma_set()
    g0, g5 = gs.gamma[0], gs.gamma5
    if cls is PoincareClass.SCALAR:
        return config.phi_S * I4
    if cls is PoincareClass.PSEUDOSCALAR:
        return 1j * config.mu * g5
    if cls is PoincareClass.VECTOR:
        return config.A0 * g0 - gs.dot_gamma(config.A)
    if cls is PoincareClass.PSEUDOVECTOR:
        return g5 @ (config.q * g0 - gs.dot_gamma(config.W))
    if cls is PoincareClass.TENSOR:
        return config.kappa * _half_sigma_f(config.E, config.B)
    if cls is PoincareClass.PSEUDOTENSOR:
        return -1j * config.chi * g5 @ _half_sigma_f(config.E, config.B)
    raise TypeError(f"Unknown Poincaré class: {cls}")  # pragma: no cover


def hamiltonian_term(config: PotentialConfig, cls: PoincareClass) -> ComplexMatrix:
    """Potential term V = γ⁰U written with Dirac matrices"""
    gs = build_gamma_set()
    g0, g5 = gs.gamma[0], gs.gamma5
    if cls is PoincareClass.SCALAR:
        return config.phi_S * g0
    if cls is PoincareClass.PSEUDOSCALAR:
        return 1j * config.mu * g0 @ g5
    if cls is PoincareClass.VECTOR:
        return config.A0 * I4 - gs.dot_alpha(config.A)
    if cls is PoincareClass.PSEUDOVECTOR:
        return -config.q * g5 + g5 @ gs.dot_alpha(config.W)
    if cls is PoincareClass.TENSOR:
        return config.kappa * (1j * gs.dot_gamma(config.E) + g5 @ gs.dot_gamma(config.B))
    if cls is PoincareClass.PSEUDOTENSOR:
        return config.chi * (1j * gs.dot_gamma(config.B) - g5 @ gs.dot_gamma(config.E))
    raise TypeError(f"Unknown Poincaré class: {cls}")  # pragma: no cover


def _pauli_dot(v: Vector3) -> ComplexMatrix:
    return sum(c * s for c, s in zip(v, PAULI))  # type: ignore


def su2su2_term(config: PotentialConfig, cls: PoincareClass) -> ComplexMatrix:
    """Potential term V written as Kronecker products of Pauli factors"""
    if cls is PoincareClass.SCALAR:
        return config.phi_S * kron(SIGMA_Z, I2)
    if cls is PoincareClass.PSEUDOSCALAR:
        return -config.mu * kron(SIGMA_Y, I2)
    if cls is PoincareClass.VECTOR:
        return config.A0 * I4 - kron(SIGMA_X, _pauli_dot(config.A))
    if cls is PoincareClass.PSEUDOVECTOR:
        return -config.q * kron(SIGMA_X, I2) + kron(I2, _pauli_dot(config.W))
    if cls is PoincareClass.TENSOR:
        return -config.kappa * (kron(SIGMA_Y, _pauli_dot(config.E)) + kron(SIGMA_Z, _pauli_dot(config.B)))
    if cls is PoincareClass.PSEUDOTENSOR:
        return config.chi * (kron(SIGMA_Z, _pauli_dot(config.E)) - kron(SIGMA_Y, _pauli_dot(config.B)))
    raise TypeError(f"Unknown Poincaré class: {cls}")  # pragma: no cover


def build_hamiltonian(config: PotentialConfig, subtract_A0: bool = True) -> DiracHamiltonian:
    """Assemble the interacting Hamiltonian

        H̃ = γ⁰m_eff + α⃗·𝒫 + iγ⁰γ₅μ − γ₅q + γ₅α⃗·W + iγ⃗·B_χ + γ₅γ⃗·B_κ

    with B_χ = χB + κE and B_κ = κB − χE, plus A⁰I₄ when `subtract_A0` is False.

    Args:
        config: field configuration
        subtract_A0: drop the A⁰I₄ term (default, the analysed H̃ is traceless)
    """
    gs = build_gamma_set()
    g0, g5 = gs.gamma[0], gs.gamma5
    matrix = (
        config.m_eff * g0
        + gs.dot_alpha(config.P)
        + 1j * config.mu * g0 @ g5
        - config.q * g5
        + g5 @ gs.dot_alpha(config.W)
        + 1j * gs.dot_gamma(config.B_chi)
        + g5 @ gs.dot_gamma(config.B_kappa)
    )
    if not subtract_A0:
        matrix = matrix + config.A0 * I4
    _logger.debug("build_hamiltonian: %r (subtract_A0=%s)", config, subtract_A0)
    return DiracHamiltonian(matrix=matrix, config=config, includes_A0=not subtract_A0)


def su2su2_form(config: PotentialConfig, subtract_A0: bool = True) -> ComplexMatrix:
    """The same H̃ assembled purely from Kronecker products of Pauli factors"""
    b_chi, b_kappa = config.B_chi, config.B_kappa
    matrix = (
        config.m_eff * kron(SIGMA_Z, I2)
        + kron(SIGMA_X, _pauli_dot(config.P))
        - config.mu * kron(SIGMA_Y, I2)
        - config.q * kron(SIGMA_X, I2)
        + kron(I2, _pauli_dot(config.W))
        - kron(SIGMA_Y, _pauli_dot(b_chi))
        - kron(SIGMA_Z, _pauli_dot(b_kappa))
    )
    if not subtract_A0:
        matrix = matrix + config.A0 * I4
    return matrix


def random_config(
    rng: np.random.Generator,
    low: float = -2.0,
    high: float = 2.0,
    **overrides: Any,
) -> PotentialConfig:
    """Draw every coupling and field component uniformly from [low, high).

    Args:
        rng: numpy random generator
        low: lower bound
        high: upper bound
        **overrides: fixed values for selected entries, e.g. `W=0, E=0`

    Returns:
        PotentialConfig
    """
    values: Dict[str, Any] = {}
    for f in dataclasses.fields(PotentialConfig):
        if f.name in _VECTOR_FIELDS:
            values[f.name] = rng.uniform(low, high, size=3)
        else:
            values[f.name] = rng.uniform(low, high)
    for name, value in overrides.items():
        if name not in values:
            raise TypeError(f"PotentialConfig has no entry `{name}`")
        values[name] = value
    return PotentialConfig(**values)
