from typing import Any

from dirac_correlations.sweep.base import BaseObservableStrategy, Case, Evaluation

__all__ = [
    "StateAttribute",
    "ReportAttribute",
    "ValidityObservable",
    "BlochModulusObservable",
    "MeasureObservable",
]


class StateAttribute(BaseObservableStrategy):
    """read an attribute of the ansatz state"""

    def __init__(self, name: str):
        self.name = name

    def __call__(self, evaluation: Evaluation) -> Any:
        return float(getattr(evaluation.state, self.name))


class ReportAttribute(BaseObservableStrategy):
    """read an attribute of the correlation report"""

    def __init__(self, name: str):
        self.name = name

    def __call__(self, evaluation: Evaluation) -> Any:
        return float(getattr(evaluation.report, self.name))


class ValidityObservable(BaseObservableStrategy):
    def __call__(self, evaluation: Evaluation) -> Any:
        return evaluation.state.purity_class.value


class BlochModulusObservable(BaseObservableStrategy):
    def __call__(self, evaluation: Evaluation) -> Any:
        a = evaluation.bloch.a2
        return float(a @ a)


class MeasureObservable(BaseObservableStrategy):
    """discord on the parity side for the mixed pseudoscalar state, concurrence otherwise"""

    def __call__(self, evaluation: Evaluation) -> Any:
        if evaluation.case is Case.PSEUDOSCALAR:
            return float(evaluation.report.discord_geo_1)
        return float(evaluation.report.concurrence)
