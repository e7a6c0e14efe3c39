import numpy as np

from dirac_correlations.potentials import PotentialConfig

SEED = 20240611
RANDOM_TRIALS = 20
ACCEPTANCE_TRIALS = 1000
ORACLE_SAMPLES = 500

# free particle, 𝒫 along x̂: O = 0, rank-two state with t_xx = 1/√2
FREE_CONFIG = PotentialConfig(m=1.0, p=(1.0, 0.0, 0.0))

# pseudoscalar, 𝒫² = m² + μ²: c1 = 4, D1 = 1/8
PSEUDOSCALAR_CONFIG = PotentialConfig(m=1.0, mu=1.0, p=(np.sqrt(2.0), 0.0, 0.0))

# tensor, B ⊥ 𝒫: c1 = 3, c2 = 2, |λ| = √2 ± 1, C = 1/√2
TENSOR_CONFIG = PotentialConfig(m=1.0, kappa=1.0, p=(1.0, 0.0, 0.0), B=(0.0, 1.0, 0.0))

# combined case violating m κ W·B + q 𝒫·W = 0
UNSUPPORTED_CONFIG = PotentialConfig(m=1.0, kappa=1.0, W=(1.0, 0.0, 0.0), B=(1.0, 0.0, 0.0), p=(0.0, 1.0, 0.0))

BELL_VECTOR = np.array([1.0, 0.0, 0.0, 1.0], dtype=np.complex128) / np.sqrt(2.0)
BELL_STATE = np.outer(BELL_VECTOR, BELL_VECTOR.conj())

PRODUCT_VECTOR = np.array([1.0, 0.0, 0.0, 0.0], dtype=np.complex128)
PRODUCT_STATE = np.outer(PRODUCT_VECTOR, PRODUCT_VECTOR.conj())

MAXIMALLY_MIXED = np.eye(4, dtype=np.complex128) / 4

EOF_OF_HALF_ROOT2 = 0.600876

PSEUDOSCALAR_SWEEP = """
# pseudoscalar curve
case = pseudoscalar
m = 1
mu = 1
sweep = P 0 10 100
"""

VECTOR_SWEEP = """
W = 0,0,1
P = 1,0,0
m = 1
sweep = P 0 10 11
"""

TENSOR_SWEEP = """
case = tensor
m = 1
kappa = 1
B = 1
series = P 1,4
sweep = sin_theta 0 1 11
outputs = c1,c2,lambda,validity,concurrence,measure
"""

DEGENERATE_SWEEP = """
sweep = P 0 1 3
outputs = c1,lambda,concurrence
"""

UNSUPPORTED_SWEEP = """
case = combined
m = 1
kappa = 1
W = 1,0,0
B = 1,0,0
P = 0,1,0
sweep = B 1 2 3
"""


def pure_state(vector) -> np.ndarray:
    vector = np.asarray(vector, dtype=np.complex128)
    vector = vector / np.linalg.norm(vector)
    return np.outer(vector, vector.conj())


def werner_state(p: float) -> np.ndarray:
    return p * BELL_STATE + (1 - p) * MAXIMALLY_MIXED
