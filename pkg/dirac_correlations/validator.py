"""Validator decorators for matrix arguments"""
from functools import wraps
from typing import Any, Callable, Optional, Tuple, TypeVar

import numpy as np

from dirac_correlations.constants import Tolerances
from dirac_correlations.exceptions import NonFiniteValue, NotAState, NotHermitian

__all__ = ["matrix_pre_validator", "hermiticity_defect"]

F = TypeVar("F", bound=Callable[..., Any])


def hermiticity_defect(m: np.ndarray) -> float:
    """‖m − m†‖_F"""
    return float(np.linalg.norm(m - m.conj().T))


class MatrixPreValidator:
    """pre validate matrix decorator"""

    def __init__(
        self,
        *,
        shape: Optional[Tuple[int, ...]] = None,
        hermitian: bool = False,
        state: bool = False,
        finite: bool = True,
    ):
        """Pre-validation of the first (matrix) argument of a function.

        The argument is converted to a complex ndarray before the wrapped
        function receives it.

        Args:
            shape: required shape, for example (4, 4)
            hermitian: require ‖m − m†‖_F ≤ tol·‖m‖_F
            state: require a density matrix (Hermitian, unit trace)
            finite: reject NaN and Inf entries

        Raises:
            NonFiniteValue: if finite=True and any entry is NaN or Inf
            NotHermitian: if hermitian=True and the check fails
            NotAState: if state=True and the check fails
            ValueError: if the shape does not match
        """
        self.shape = shape
        self.hermitian = hermitian
        self.state = state
        self.finite = finite

    def __call__(self, func: F) -> F:
        @wraps(func)
        def inner(m, *args, **kwargs):
            m = np.asarray(m, dtype=np.complex128)
            if self.shape and m.shape != self.shape:
                msg = f"`{func.__name__}` expects shape {self.shape}, got {m.shape}"
                raise ValueError(msg)
            if self.finite and not np.all(np.isfinite(m)):
                raise NonFiniteValue(f"non-finite entries passed to `{func.__name__}`")
            if self.hermitian and not self._is_hermitian(m):
                raise NotHermitian(
                    f"`{func.__name__}`: ‖m − m†‖_F = {hermiticity_defect(m):.3e}"
                )
            if self.state:
                self._validate_state(m, func.__name__)
            return func(m, *args, **kwargs)

        return inner  # type: ignore

    @staticmethod
    def _is_hermitian(m: np.ndarray) -> bool:
        return hermiticity_defect(m) <= Tolerances.hermiticity * float(np.linalg.norm(m))

    @staticmethod
    def _validate_state(m: np.ndarray, name: str) -> None:
        if hermiticity_defect(m) > Tolerances.state_hermiticity:
            raise NotAState(f"`{name}`: density matrix is not Hermitian")
        trace = np.trace(m)
        if abs(trace - 1.0) > Tolerances.state_trace:
            raise NotAState(f"`{name}`: Tr[ρ] = {trace.real:.12g}, expected 1")


matrix_pre_validator = MatrixPreValidator
