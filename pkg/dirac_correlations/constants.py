"""Numerical tolerances shared by every module.

Values are absolute-relative hybrids: a check against `tol` passes when the
residual is below `tol * max(1, scale)` with `scale` a Frobenius norm or an
invariant of the matrix at hand.
"""
from typing import Tuple


class Tolerances:
    """Tolerance table

    Attributes:
        hermiticity: relative bound on ‖m − m†‖_F / ‖m‖_F
        eigen_residual: relative residual of hermitian eigenpairs
        psd_clamp: eigenvalues above `-psd_clamp` are clamped to zero
        traceless: bound on |Tr[H]| relative to ‖H‖_F
        degenerate_radicand: λ² below this (times max(1, c1)) is degenerate
        pure_square: bound on ‖O² − c2·I‖ relative to max(1, c2)
        pure_c2: c2 must exceed this for a pure projector
        mixed_zero_o: ‖O‖ below this (times max(1, c1)) means O = 0
        state_trace: allowed |Tr[ρ] − 1| for a density matrix
        state_hermiticity: allowed ‖ρ − ρ†‖_F
        pure_purity: Tr[ρ²] above `1 - pure_purity` is treated as pure
        pure_bloch: allowed |a1² − a2²| in the pure-state formula
        wootters_imag: imaginary parts allowed in the ρρ̃ spectrum
        wootters_floor: eigenvalues of √ρ ρ̃ √ρ below this are zero
        entropy_floor: eigenvalues below this are dropped from entropies
        constraint: bound on |m W·B + q 𝒫·W| for the combined case
    """

    hermiticity: float = 1e-10
    eigen_residual: float = 1e-10
    psd_clamp: float = 1e-10
    traceless: float = 1e-12
    degenerate_radicand: float = 1e-14
    pure_square: float = 1e-10
    pure_c2: float = 1e-12
    mixed_zero_o: float = 1e-12
    state_trace: float = 1e-10
    state_hermiticity: float = 1e-10
    pure_purity: float = 1e-8
    pure_bloch: float = 1e-8
    wootters_imag: float = 1e-8
    wootters_floor: float = 1e-13
    entropy_floor: float = 1e-14
    constraint: float = 1e-10


# oracle agreement used by `--check`
CHECK_TOLERANCE: float = 1e-8
# upper bound of grid points per sweep
MAX_GRID_POINTS: int = 10**7
# spin / parity index values of the ansatz
INDICES: Tuple[int, int] = (1, 2)
