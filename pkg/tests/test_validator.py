import numpy as np
import pytest
from tests.fixtures import BELL_STATE, MAXIMALLY_MIXED

from dirac_correlations.exceptions import NonFiniteValue, NotAState, NotHermitian
from dirac_correlations.validator import hermiticity_defect, matrix_pre_validator


@matrix_pre_validator(shape=(4, 4), hermitian=True)
def hermitian_trace(m):
    return np.trace(m)


@matrix_pre_validator(shape=(4, 4), state=True)
def state_trace(rho):
    return np.trace(rho)


@matrix_pre_validator(finite=False)
def passthrough(m):
    return m


def test_accepts_hermitian():
    assert np.isclose(hermitian_trace(np.diag([1.0, 2.0, 3.0, 4.0])), 10.0)


def test_converts_lists():
    result = passthrough([[1, 2], [3, 4]])
    assert isinstance(result, np.ndarray)
    assert result.dtype == np.complex128


def test_wrong_shape():
    with pytest.raises(ValueError):
        hermitian_trace(np.eye(2))


def test_non_finite():
    m = np.eye(4)
    m[0, 0] = np.nan
    with pytest.raises(NonFiniteValue):
        hermitian_trace(m)
    assert np.isnan(passthrough(m)[0, 0])


def test_not_hermitian():
    m = np.zeros((4, 4))
    m[0, 1] = 1.0
    with pytest.raises(NotHermitian):
        hermitian_trace(m)


def test_state_check():
    assert np.isclose(state_trace(BELL_STATE), 1.0)
    assert np.isclose(state_trace(MAXIMALLY_MIXED), 1.0)
    with pytest.raises(NotAState):
        state_trace(2 * MAXIMALLY_MIXED)


def test_hermiticity_defect():
    m = np.zeros((2, 2), dtype=np.complex128)
    m[0, 1] = 1j
    assert hermiticity_defect(m) == pytest.approx(np.sqrt(2.0))
    assert hermiticity_defect(np.eye(2)) == 0.0


def test_keeps_function_name():
    assert hermitian_trace.__name__ == "hermitian_trace"
