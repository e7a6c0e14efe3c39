from abc import abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, FrozenSet, NamedTuple, Optional, Protocol, Tuple

import numpy as np

from dirac_correlations._typing import Vector3
from dirac_correlations.ansatz import AnsatzState
from dirac_correlations.correlations import BlochDecomposition, CorrelationReport
from dirac_correlations.potentials import PotentialConfig
from dirac_correlations.scenarios import ScenarioResult

__all__ = [
    "Observable",
    "SweepParam",
    "Geometry",
    "Case",
    "GridPoint",
    "Evaluation",
    "BaseObservableStrategy",
    "ObservableHandler",
    "BaseGeometryStrategy",
    "GeometryHandler",
]


class Observable(Enum):
    """enumeration of sweep output columns

    Attributes:
        C1: first invariant c₁
        C2: second invariant c₂
        LAMBDA: energy λ of the selected branch
        PURITY: Tr[ρ²]
        VALIDITY: purity class of the ansatz state
        CONCURRENCE: Wootters concurrence
        EOF: entanglement of formation
        ENTROPY_TOTAL: von Neumann entropy of ρ
        ENTROPY_SUB1: von Neumann entropy of the parity factor
        ENTROPY_SUB2: von Neumann entropy of the spin factor
        DISCORD_GEO_1: geometric discord measured on the parity side
        DISCORD_GEO_2: geometric discord measured on the spin side
        A2: squared modulus of the spin Bloch vector
        MEASURE: the figure quantity, discord for the pseudoscalar case, concurrence otherwise
    """

    C1 = "c1"
    C2 = "c2"
    LAMBDA = "lambda"
    PURITY = "purity"
    VALIDITY = "validity"
    CONCURRENCE = "concurrence"
    EOF = "eof"
    ENTROPY_TOTAL = "entropy_total"
    ENTROPY_SUB1 = "entropy_sub1"
    ENTROPY_SUB2 = "entropy_sub2"
    DISCORD_GEO_1 = "discord_geo_1"
    DISCORD_GEO_2 = "discord_geo_2"
    A2 = "a2"
    MEASURE = "measure"


class SweepParam(Enum):
    THETA = "theta"
    SIN_THETA = "sin_theta"
    COS_THETA = "cos_theta"
    P = "P"
    W = "W"
    Q = "q"
    B = "B"
    MU = "mu"
    M = "m"


class Geometry(Enum):
    """Frame used to turn magnitudes and an angle into field vectors

    Attributes:
        EXPLICIT: vectors are taken as written in the config
        PSEUDOSCALAR: 𝒫 along x̂
        TENSOR_B_IN_PLANE: 𝒫 along x̂, B in the xy-plane at angle θ (coupling κ)
        PSEUDOTENSOR_B_IN_PLANE: same frame with coupling χ
        TENSOR_CRITICAL_B: tensor frame with κB = √(𝒫² + m²)
        PSEUDOVECTOR_W_IN_PLANE: 𝒫 along x̂, W in the xy-plane at angle θ
        COMBINED_W_PERP: B in the xy-plane at θ, W along ±ẑ
        COMBINED_B_PERP: W in the xy-plane at θ, B along ±ẑ
    """

    EXPLICIT = "explicit"
    PSEUDOSCALAR = "pseudoscalar"
    TENSOR_B_IN_PLANE = "tensor_B_in_plane"
    PSEUDOTENSOR_B_IN_PLANE = "pseudotensor_B_in_plane"
    TENSOR_CRITICAL_B = "tensor_critical_B"
    PSEUDOVECTOR_W_IN_PLANE = "pseudovector_W_in_plane"
    COMBINED_W_PERP = "combined_W_perp"
    COMBINED_B_PERP = "combined_B_perp"


class Case(Enum):
    GENERIC = "generic"
    PSEUDOSCALAR = "pseudoscalar"
    TENSOR = "tensor"
    PSEUDOTENSOR = "pseudotensor"
    PSEUDOVECTOR = "pseudovector"
    COMBINED = "combined"


@dataclass(frozen=True, eq=False)
class GridPoint:
    """Resolved parameters of one grid point, `scale` already applied.

    `m` already includes φ_S.
    """

    m: float
    mu: float
    q: float
    kappa: float
    chi: float
    A0: float
    A: Vector3
    E: Vector3
    P: Vector3
    W: Vector3
    B: Vector3
    theta: float
    orientation: int
    s: int
    n: int

    @property
    def P_mag(self) -> float:
        return float(np.linalg.norm(self.P))

    @property
    def W_mag(self) -> float:
        return float(np.linalg.norm(self.W))

    @property
    def B_mag(self) -> float:
        return float(np.linalg.norm(self.B))


class Evaluation(NamedTuple):
    """Everything computed for one grid point"""

    point: GridPoint
    case: Case
    config: PotentialConfig
    state: AnsatzState
    report: CorrelationReport
    bloch: BlochDecomposition


class ObservableCallable(Protocol):
    def __call__(self, evaluation: Evaluation) -> Any:
        pass  # pragma: no cover


class BaseObservableStrategy:
    @abstractmethod
    def __call__(self, evaluation: Evaluation) -> Any:
        pass  # pragma: no cover


class ObservableHandler:
    def __init__(self):
        """Observable handler"""
        self.observables_dict: Dict[Observable, ObservableCallable] = {}

    def add_method(self, observable: Observable, strategy: ObservableCallable) -> None:
        """Add observable strategy to handler storage"""
        self.observables_dict[observable] = strategy

    def handle(self, observable: Observable, evaluation: Evaluation) -> Any:
        """Evaluate one output column

        Raises:
            TypeError if the observable is not registered in this handler
        """
        if strategy := self.observables_dict.get(observable):
            return strategy(evaluation)
        raise TypeError(f"Unknown observable: {observable}")  # pragma: no cover


class BaseGeometryStrategy:
    """Maps a grid point to a configuration and to its closed-form oracle

    Attributes:
        params: sweep and series parameters that enter this frame
        cases: cases this frame can describe; the first registered frame listing a case is its default
    """

    params: FrozenSet[SweepParam] = frozenset()
    cases: Tuple[Case, ...] = ()

    @abstractmethod
    def frame(self, point: GridPoint, case: Case) -> PotentialConfig:
        pass  # pragma: no cover

    def oracle(self, point: GridPoint, case: Case) -> Optional[ScenarioResult]:
        """closed form of the point, `None` when the frame has none"""
        return None

    def extra_columns(self) -> Tuple[str, ...]:
        """names of additional oracle columns"""
        return ()

    def extra_oracle(self, point: GridPoint, result: ScenarioResult) -> Dict[str, float]:
        return {}


class GeometryHandler:
    def __init__(self):
        """Geometry handler"""
        self.geometries_dict: Dict[Geometry, BaseGeometryStrategy] = {}

    def add_method(self, geometry: Geometry, strategy: BaseGeometryStrategy) -> None:
        self.geometries_dict[geometry] = strategy

    def get(self, geometry: Geometry) -> BaseGeometryStrategy:
        """
        Raises:
            TypeError if the geometry is not registered in this handler
        """
        if strategy := self.geometries_dict.get(geometry):
            return strategy
        raise TypeError(f"Unknown geometry: {geometry}")  # pragma: no cover

    def default_geometry(self, case: Case) -> Geometry:
        for geometry, strategy in self.geometries_dict.items():
            if case in strategy.cases:
                return geometry
        raise TypeError(f"No geometry describes case {case.value}")  # pragma: no cover

    def accepts(self, geometry: Geometry, case: Case) -> bool:
        return case in self.get(geometry).cases
