from dirac_correlations.ansatz import (
    AnsatzInputs,
    AnsatzState,
    PurityClass,
    build_O,
    build_state,
    compute_invariants,
    eigenvalue_lambda,
    purity_condition,
)
from dirac_correlations.clifford import build_gamma_basis, build_gamma_set, decompose_in_basis
from dirac_correlations.correlations import (
    BlochDecomposition,
    CorrelationReport,
    bloch_decompose,
    concurrence_pure,
    concurrence_wootters,
    entanglement_of_formation,
    full_report,
    geometric_discord,
    von_neumann_entropy,
)
from dirac_correlations.potentials import DiracHamiltonian, PotentialConfig, build_hamiltonian

__version__ = "0.1.0"
