"""Dense 2×2 / 4×4 complex arithmetic.

Every operator of the library is a 4×4 complex matrix (or a 2×2 reduced
state), so this module only wraps the numpy/LAPACK kernels with the domain
checks and errors the rest of the package relies on.
"""
from typing import Tuple

import numpy as np

from dirac_correlations._logger import _logger
from dirac_correlations._typing import ComplexMatrix, RealMatrix
from dirac_correlations.constants import Tolerances
from dirac_correlations.exceptions import NegativeSpectrum, NoConvergence
from dirac_correlations.validator import matrix_pre_validator

__all__ = [
    "I2",
    "I4",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "PAULI",
    "kron",
    "dagger",
    "commutator",
    "anticommutator",
    "frobenius_norm",
    "hermitian_eigensystem",
    "general_eigenvalues",
    "sqrt_psd",
]

I2: ComplexMatrix = np.eye(2, dtype=np.complex128)
I4: ComplexMatrix = np.eye(4, dtype=np.complex128)
SIGMA_X: ComplexMatrix = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y: ComplexMatrix = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z: ComplexMatrix = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULI: Tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix] = (SIGMA_X, SIGMA_Y, SIGMA_Z)

for _m in (I2, I4, SIGMA_X, SIGMA_Y, SIGMA_Z):
    _m.setflags(write=False)

_SQUARE_SIZES = ((2, 2), (4, 4))


def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Kronecker product of two 2×2 matrices; block (i, j) equals a[i, j]·b"""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError(f"kron expects 2×2 factors, got {a.shape} and {b.shape}")
    return np.kron(a, b)


def dagger(m: ComplexMatrix) -> ComplexMatrix:
    return np.conj(np.transpose(m))


def commutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    return a @ b - b @ a


def anticommutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    return a @ b + b @ a


def frobenius_norm(m: ComplexMatrix) -> float:
    return float(np.linalg.norm(m))


def _check_square(m: ComplexMatrix, name: str) -> None:
    if m.shape not in _SQUARE_SIZES:
        raise ValueError(f"`{name}` supports 2×2 and 4×4 matrices, got {m.shape}")


@matrix_pre_validator(hermitian=True)
def hermitian_eigensystem(m: ComplexMatrix) -> Tuple[RealMatrix, ComplexMatrix]:
    """Eigen-decomposition of a Hermitian 2×2 or 4×4 matrix.

    Args:
        m: Hermitian matrix (checked against `Tolerances.hermiticity`)

    Returns:
        ascending real eigenvalues and the matching orthonormal eigenvectors
        as the columns of a unitary matrix

    Raises:
        NotHermitian: if ‖m − m†‖_F > tol·‖m‖_F
        NoConvergence: if LAPACK fails or the residual check does not pass
    """
    _check_square(m, "hermitian_eigensystem")
    # eigh only reads one triangle; symmetrize so both halves count
    sym = 0.5 * (m + dagger(m))
    try:
        values, vectors = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as e:
        raise NoConvergence(f"hermitian eigensolver failed: {e}") from e

    residual = float(np.linalg.norm(sym @ vectors - vectors * values))
    scale = max(1.0, frobenius_norm(sym))
    if residual > Tolerances.eigen_residual * scale:
        raise NoConvergence(f"eigenpair residual {residual:.3e} exceeds tolerance")
    return values, vectors


@matrix_pre_validator()
def general_eigenvalues(m: ComplexMatrix) -> np.ndarray:
    """Eigenvalues of an arbitrary 2×2 or 4×4 complex matrix.

    Returns:
        complex eigenvalues sorted by (real, imag) so that the output is
        reproducible

    Raises:
        NoConvergence: if LAPACK fails
    """
    _check_square(m, "general_eigenvalues")
    try:
        values = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as e:
        raise NoConvergence(f"general eigensolver failed: {e}") from e
    return np.sort_complex(values.astype(np.complex128))


def sqrt_psd(m: ComplexMatrix) -> ComplexMatrix:
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in [-tol, 0) are clamped to zero.

    Raises:
        NotHermitian: if m is not Hermitian
        NegativeSpectrum: if an eigenvalue is below -tol
    """
    values, vectors = hermitian_eigensystem(m)
    if values[0] < -Tolerances.psd_clamp:
        raise NegativeSpectrum(f"smallest eigenvalue {values[0]:.3e} is negative")
    if values[0] < 0:
        _logger.debug("sqrt_psd: clamp eigenvalue %.3e to 0", values[0])
    root = np.sqrt(np.clip(values, 0.0, None))
    return (vectors * root) @ dagger(vectors)
