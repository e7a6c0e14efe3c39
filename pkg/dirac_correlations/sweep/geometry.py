"""Frame strategies: grid point → PotentialConfig and closed-form oracle"""
from typing import Dict, Optional, Tuple

import numpy as np

from dirac_correlations.potentials import PotentialConfig
from dirac_correlations.scenarios import (
    ScenarioResult,
    case_combined,
    case_combined_b_perp,
    case_combined_w_perp,
    case_pseudoscalar,
    case_pseudovector,
    case_tensor_pseudoscalar,
    frame_combined_b_perp,
    frame_combined_w_perp,
    frame_pseudoscalar,
    frame_pseudovector,
    frame_tensor,
    ur_limit_combined,
)
from dirac_correlations.sweep.base import BaseGeometryStrategy, Case, GridPoint, SweepParam

__all__ = [
    "ExplicitGeometry",
    "PseudoscalarGeometry",
    "TensorGeometry",
    "CriticalTensorGeometry",
    "PseudovectorGeometry",
    "CombinedWPerpGeometry",
    "CombinedBPerpGeometry",
]

_ANGLES = frozenset({SweepParam.THETA, SweepParam.SIN_THETA, SweepParam.COS_THETA})
_MASSES = frozenset({SweepParam.M, SweepParam.MU})


def _with_gauge(config: PotentialConfig, point: GridPoint) -> PotentialConfig:
    """add A⁰ and A⃗ on top of a frame that fixes the kinetic momentum 𝒫"""
    return config.replace(A0=point.A0, A=point.A, p=config.p + point.A)


class ExplicitGeometry(BaseGeometryStrategy):
    params = frozenset({SweepParam.P, SweepParam.W, SweepParam.B, SweepParam.Q}) | _MASSES
    cases = (Case.GENERIC, Case.COMBINED)

    def frame(self, point: GridPoint, case: Case) -> PotentialConfig:
        return PotentialConfig(
            m=point.m,
            mu=point.mu,
            A0=point.A0,
            A=point.A,
            q=point.q,
            W=point.W,
            kappa=point.kappa,
            chi=point.chi,
            B=point.B,
            E=point.E,
            p=point.P + point.A,
        )

    def oracle(self, point: GridPoint, case: Case) -> Optional[ScenarioResult]:
        if case is not Case.COMBINED:
            return None
        return case_combined(
            point.m, point.mu, point.q, point.W, point.B, point.P, s=point.s, n=point.n, kappa=point.kappa
        )


class PseudoscalarGeometry(BaseGeometryStrategy):
    params = frozenset({SweepParam.P}) | _MASSES
    cases = (Case.PSEUDOSCALAR,)

    def frame(self, point: GridPoint, case: Case) -> PotentialConfig:
        return _with_gauge(frame_pseudoscalar(point.m, point.mu, point.P_mag), point)

    def oracle(self, point: GridPoint, case: Case) -> Optional[ScenarioResult]:
        return case_pseudoscalar(point.m, point.mu, point.P_mag, n=point.n)

    def extra_columns(self) -> Tuple[str, ...]:
        return ("oracle_printed_discord",)

    def extra_oracle(self, point: GridPoint, result: ScenarioResult) -> Dict[str, float]:
        return {"oracle_printed_discord": result.printed_measure}  # type: ignore


class TensorGeometry(BaseGeometryStrategy):
    """𝒫 along x̂, B at angle θ in the xy-plane; `pseudotensor` reads χ instead of κ"""

    def __init__(self, pseudotensor: bool = False):
        self.pseudotensor = pseudotensor
        self.params = frozenset({SweepParam.P, SweepParam.B}) | _MASSES | _ANGLES
        self.cases = (Case.PSEUDOTENSOR,) if pseudotensor else (Case.TENSOR,)

    def coupling(self, point: GridPoint) -> float:
        return point.chi if self.pseudotensor else point.kappa

    def field(self, point: GridPoint) -> float:
        return point.B_mag

    def frame(self, point: GridPoint, case: Case) -> PotentialConfig:
        config = frame_tensor(
            point.m,
            point.mu,
            self.coupling(point),
            self.field(point),
            point.P_mag,
            point.theta,
            pseudotensor=self.pseudotensor,
        )
        return _with_gauge(config, point)

    def oracle(self, point: GridPoint, case: Case) -> Optional[ScenarioResult]:
        return case_tensor_pseudoscalar(
            point.m,
            point.mu,
            self.coupling(point),
            self.field(point),
            point.P_mag,
            point.theta,
            s=point.s,
            n=point.n,
            pseudotensor=self.pseudotensor,
        )


class CriticalTensorGeometry(TensorGeometry):
    """Tensor frame with the field tied to the momentum, |κ|B = √(𝒫² + m²)"""

    def __init__(self):
        super().__init__(pseudotensor=False)
        self.params = frozenset({SweepParam.P}) | _MASSES | _ANGLES

    def field(self, point: GridPoint) -> float:
        return float(np.sqrt(point.P_mag**2 + point.m**2)) / abs(point.kappa)


class PseudovectorGeometry(BaseGeometryStrategy):
    params = frozenset({SweepParam.P, SweepParam.W, SweepParam.Q}) | _MASSES | _ANGLES
    cases = (Case.PSEUDOVECTOR,)

    def frame(self, point: GridPoint, case: Case) -> PotentialConfig:
        config = frame_pseudovector(point.m, point.mu, point.q, point.W_mag, point.P_mag, point.theta)
        return _with_gauge(config, point)

    def oracle(self, point: GridPoint, case: Case) -> Optional[ScenarioResult]:
        return case_pseudovector(
            point.m, point.mu, point.q, point.W_mag, point.P_mag, point.theta, s=point.s, n=point.n
        )


class CombinedWPerpGeometry(BaseGeometryStrategy):
    params = frozenset({SweepParam.P, SweepParam.W, SweepParam.B, SweepParam.Q}) | _MASSES | _ANGLES
    cases = (Case.COMBINED,)

    def _args(self, point: GridPoint):
        return point.m, point.mu, point.q, point.W_mag, point.B_mag, point.P_mag, point.theta

    def frame(self, point: GridPoint, case: Case) -> PotentialConfig:
        config = frame_combined_w_perp(*self._args(point), orientation=point.orientation, kappa=point.kappa)
        return _with_gauge(config, point)

    def oracle(self, point: GridPoint, case: Case) -> Optional[ScenarioResult]:
        return case_combined_w_perp(
            *self._args(point), s=point.s, n=point.n, orientation=point.orientation, kappa=point.kappa
        )


class CombinedBPerpGeometry(CombinedWPerpGeometry):
    def frame(self, point: GridPoint, case: Case) -> PotentialConfig:
        config = frame_combined_b_perp(*self._args(point), orientation=point.orientation, kappa=point.kappa)
        return _with_gauge(config, point)

    def oracle(self, point: GridPoint, case: Case) -> Optional[ScenarioResult]:
        return case_combined_b_perp(
            *self._args(point), s=point.s, n=point.n, orientation=point.orientation, kappa=point.kappa
        )

    def extra_columns(self) -> Tuple[str, ...]:
        return ("oracle_ur_concurrence",)

    def extra_oracle(self, point: GridPoint, result: ScenarioResult) -> Dict[str, float]:
        return {"oracle_ur_concurrence": ur_limit_combined(point.W_mag, abs(point.kappa) * point.B_mag, point.theta)}
