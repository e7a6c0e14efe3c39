import numpy as np
import pytest
from tests.fixtures import ORACLE_SAMPLES, SEED

from dirac_correlations.ansatz import AnsatzInputs, build_state, compute_invariants
from dirac_correlations.correlations import bloch_decompose, concurrence_wootters, geometric_discord
from dirac_correlations.exceptions import (
    ConstraintViolated,
    DegenerateEnergy,
    OutOfRange,
    UnsupportedConfiguration,
)
from dirac_correlations.potentials import build_hamiltonian
from dirac_correlations.scenarios import (
    ScenarioValidity,
    case_combined,
    case_combined_b_perp,
    case_combined_w_perp,
    case_pseudoscalar,
    case_pseudovector,
    case_tensor_pseudoscalar,
    critical_angle,
    frame_combined_w_perp,
    printed_discord_pseudoscalar,
    ur_limit_combined,
    ur_limit_combined_a2,
)

ANGLES = (0.2, 0.7, 1.3, np.pi / 2)
BRANCHES = ((1, 1), (1, 2), (2, 1), (2, 2))


def _assert_matches_pipeline(result, s, n):
    h = build_hamiltonian(result.config)
    c1, c2, _ = compute_invariants(h)
    state = build_state(AnsatzInputs(h, s=s, n=n))
    b = bloch_decompose(state.rho)
    assert abs(c1 - result.c1) <= 1e-10 * max(1.0, result.c1)
    assert abs(c2 - result.c2) <= 1e-10 * max(1.0, result.c2)
    assert abs(state.lam - result.lam) <= 1e-10 * max(1.0, abs(result.lam))
    assert np.allclose(b.a2, result.bloch_a, atol=1e-9)
    assert abs(concurrence_wootters(state.rho) ** 2 - result.concurrence**2) < 1e-7


def test_pseudoscalar_values():
    result = case_pseudoscalar(1.0, 1.0, np.sqrt(2.0))
    assert result.validity is ScenarioValidity.EXACT
    assert np.isclose(result.c1, 4.0)
    assert result.c2 == 0.0
    assert np.isclose(result.lam, 2.0)
    assert np.isclose(result.measure, 0.125)
    assert np.isclose(result.printed_measure, 0.1464466, atol=1e-7)
    assert result.concurrence == 0.0


def test_pseudoscalar_negative_branch():
    assert np.isclose(case_pseudoscalar(1.0, 1.0, 1.0, n=1).lam, -np.sqrt(3.0))


def test_pseudoscalar_discord_matches_state():
    for P in (0.0, 0.5, 1.0, 3.0, 10.0):
        result = case_pseudoscalar(1.0, 2.0, P)
        state = build_state(AnsatzInputs(build_hamiltonian(result.config)))
        b = bloch_decompose(state.rho)
        assert np.isclose(geometric_discord(b, 1), result.measure, atol=1e-12)
        assert geometric_discord(b, 2) < 1e-12
        assert np.isclose(state.c1, result.c1)


def test_pseudoscalar_discord_peak():
    m, mu = 1.0, 2.0
    peak = np.sqrt(m**2 + mu**2)
    at_peak = case_pseudoscalar(m, mu, peak).measure
    assert np.isclose(at_peak, 0.125)
    assert case_pseudoscalar(m, mu, 0.8 * peak).measure < at_peak
    assert case_pseudoscalar(m, mu, 1.2 * peak).measure < at_peak


def test_printed_discord_vanishes_without_mu():
    assert printed_discord_pseudoscalar(1.0, 0.0, 3.0) == 0.0


def test_pseudoscalar_errors():
    with pytest.raises(OutOfRange):
        case_pseudoscalar(1.0, 1.0, -1.0)
    with pytest.raises(DegenerateEnergy):
        case_pseudoscalar(0.0, 0.0, 0.0)


def test_tensor_example():
    result = case_tensor_pseudoscalar(1.0, 0.0, 1.0, 1.0, 1.0, np.pi / 2)
    assert np.isclose(result.c1, 3.0)
    assert np.isclose(result.c2, 2.0)
    assert np.isclose(abs(result.lam), np.sqrt(2.0) - 1)
    assert np.isclose(result.concurrence, 1 / np.sqrt(2.0))
    assert np.isclose(result.a2, 0.5)
    assert np.isclose(result.concurrence**2 + result.a2, 1.0)


def test_tensor_matches_pipeline():
    for theta in ANGLES:
        for s, n in BRANCHES:
            result = case_tensor_pseudoscalar(1.0, 0.5, 1.0, 1.5, 2.0, theta, s=s, n=n)
            _assert_matches_pipeline(result, s, n)


def test_pseudotensor_matches_pipeline():
    for theta in ANGLES:
        for s, n in BRANCHES:
            result = case_tensor_pseudoscalar(1.0, 0.5, 0.8, 1.5, 2.0, theta, s=s, n=n, pseudotensor=True)
            assert result.config.kappa == 0.0
            assert result.config.chi == 0.8
            _assert_matches_pipeline(result, s, n)


def test_pseudotensor_swaps_masses():
    tensor = case_tensor_pseudoscalar(0.4, 1.3, 1.0, 1.0, 2.0, 0.9)
    pseudotensor = case_tensor_pseudoscalar(1.3, 0.4, 1.0, 1.0, 2.0, 0.9, pseudotensor=True)
    assert np.isclose(tensor.concurrence, pseudotensor.concurrence)
    assert np.isclose(tensor.lam, pseudotensor.lam)


def test_tensor_critical_field_disentangles():
    for P in (1.0, 4.0, 10.0, 100.0):
        B = np.sqrt(P**2 + 1.0)
        result = case_tensor_pseudoscalar(1.0, 1.0, 1.0, B, P, np.pi / 2, s=1)
        assert result.concurrence < 1e-10
        assert np.isclose(abs(result.lam), 1.0)


def test_tensor_errors():
    with pytest.raises(UnsupportedConfiguration):
        case_tensor_pseudoscalar(0.0, 1.0, 1.0, 1.0, 1.0, 0.0)
    with pytest.raises(OutOfRange):
        case_tensor_pseudoscalar(1.0, 0.0, 1.0, -1.0, 1.0, 0.0)


def test_pseudovector_matches_pipeline():
    for theta in ANGLES:
        for s, n in BRANCHES:
            result = case_pseudovector(1.0, 0.5, 0.0, 1.2, 2.0, theta, s=s, n=n)
            _assert_matches_pipeline(result, s, n)


def test_pseudovector_with_q_matches_pipeline():
    for s, n in BRANCHES:
        result = case_pseudovector(1.0, 0.5, 0.7, 1.2, 2.0, np.pi / 2, s=s, n=n)
        _assert_matches_pipeline(result, s, n)


def test_pseudovector_parallel_is_separable():
    assert case_pseudovector(1.0, 0.0, 0.0, 1.0, 5.0, 0.0).concurrence == 0.0


def test_pseudovector_perpendicular_maximal():
    for P in (1.0, 5.0, 10.0):
        # M = W gives λ = 𝒫 on the s = 1 branch
        assert np.isclose(case_pseudovector(1.0, 0.0, 0.0, 1.0, P, np.pi / 2, s=1).concurrence, 1.0)


def test_pseudovector_large_q():
    assert case_pseudovector(1.0, 0.0, 100.0, 1.0, 1.0, np.pi / 2).concurrence < 1e-3


def test_pseudovector_constraint():
    with pytest.raises(ConstraintViolated):
        case_pseudovector(1.0, 0.0, 1.0, 1.0, 1.0, np.pi / 4)


def test_combined_w_perp_matches_pipeline():
    for theta in (-1.2, -0.3, 0.4, 1.1):
        for s, n in BRANCHES:
            result = case_combined_w_perp(0.3, 1.0, 0.4, 1.0, 1.0, 1.5, theta, s=s, n=n)
            _assert_matches_pipeline(result, s, n)


def test_combined_b_perp_matches_pipeline():
    for theta in (0.3, 0.9, 1.4):
        for s, n in BRANCHES:
            result = case_combined_b_perp(0.0, 1.0, 0.0, 1.0, 0.7, 1.2, theta, s=s, n=n)
            _assert_matches_pipeline(result, s, n)


def test_combined_w_perp_c2():
    # m = q = 0: c2 = (μW + κ𝒫B sinθ)²
    theta = 0.6
    result = case_combined_w_perp(0.0, 1.0, 0.0, 1.0, 1.0, 1.5, theta)
    assert np.isclose(result.c2, (1.0 + 1.5 * np.sin(theta)) ** 2)


def test_combined_mirror_symmetry():
    for theta in (0.2, 0.8, 1.3):
        flipped = case_combined_w_perp(0.0, 1.0, 0.0, 1.0, 1.0, 1.5, theta, orientation=-1)
        mirrored = case_combined_w_perp(0.0, 1.0, 0.0, 1.0, 1.0, 1.5, -theta, orientation=1)
        assert np.isclose(flipped.concurrence, mirrored.concurrence)


def test_combined_frame_orientation():
    config = frame_combined_w_perp(0.0, 1.0, 0.0, 2.0, 1.0, 1.0, 0.5, orientation=-1)
    assert np.allclose(config.W, [0.0, 0.0, -2.0])


def test_combined_constraint():
    with pytest.raises(ConstraintViolated):
        case_combined(1.0, 0.0, 0.0, (1.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0))


def test_combined_null_O():
    with pytest.raises(UnsupportedConfiguration):
        case_combined(0.0, 0.0, 0.0, (0.0, 0.0, 0.0), (0.0, 0.0, 0.0), (1.0, 0.0, 0.0))


def test_ur_limit_values():
    assert np.isclose(ur_limit_combined(1.0, 0.5, 0.0), 0.4472136, atol=1e-7)
    assert np.isclose(ur_limit_combined(1.0, 0.5, np.pi / 2), 1.0)
    theta = 0.7
    assert np.isclose(ur_limit_combined(1.0, 0.5, theta) ** 2 + ur_limit_combined_a2(1.0, 0.5, theta), 1.0)
    with pytest.raises(OutOfRange):
        ur_limit_combined(0.0, 0.0, 0.0)


def test_ur_limit_approached():
    for theta in (0.0, 0.4, 0.9, 1.3):
        for B in (0.1, 0.5):
            result = case_combined_b_perp(0.0, 1.0, 0.0, 1.0, B, 1e6, theta)
            assert abs(result.concurrence - ur_limit_combined(1.0, B, theta)) < 1e-4


def test_ur_limit_pipeline():
    result = case_combined_b_perp(0.0, 1.0, 0.0, 1.0, 0.3, 1e6, 0.5)
    state = build_state(AnsatzInputs(build_hamiltonian(result.config)))
    b = bloch_decompose(state.rho)
    assert abs(np.sqrt(1 - b.a2 @ b.a2) - ur_limit_combined(1.0, 0.3, 0.5)) < 1e-4


def test_critical_angle():
    assert np.isclose(critical_angle(1.0, 1.0, 2.0, 1.0), np.pi / 6)
    assert critical_angle(1.0, 2.0, 1.0, 1.0) is None
    with pytest.raises(OutOfRange):
        critical_angle(1.0, 1.0, 0.0, 1.0)


def _pipeline(result, s=1, n=2):
    state = build_state(AnsatzInputs(build_hamiltonian(result.config), s=s, n=n))
    return state, bloch_decompose(state.rho)


def _same_concurrence(numeric, closed):
    # below the Wootters floor only C² is resolved
    return abs(numeric - closed) <= 1e-8 or abs(numeric**2 - closed**2) <= 1e-12


def _check_oracle_sample(result, s, n):
    state, b = _pipeline(result, s, n)
    assert abs(state.c1 - result.c1) <= 1e-8 * max(1.0, result.c1)
    assert abs(state.c2 - result.c2) <= 1e-8 * max(1.0, result.c2)
    assert abs(state.lam - result.lam) <= 1e-8 * max(1.0, abs(result.lam))
    assert np.allclose(b.a2, result.bloch_a, atol=1e-8, rtol=0)
    assert _same_concurrence(concurrence_wootters(state.rho), result.measure)


def _run_oracle_grid(draw):
    rng = np.random.default_rng(SEED)
    checked = 0
    for _ in range(ORACLE_SAMPLES):
        s, n = int(rng.integers(1, 3)), int(rng.integers(1, 3))
        try:
            result = draw(rng, s, n)
        except DegenerateEnergy:
            continue
        # ill-conditioned points next to c2 = 0 or λ = 0
        if result.c2 < 1e-2 or result.lam**2 < 1e-2:
            continue
        _check_oracle_sample(result, s, n)
        checked += 1
    assert checked >= 0.9 * ORACLE_SAMPLES


def test_tensor_oracle_grid():
    def draw(rng, s, n):
        return case_tensor_pseudoscalar(
            rng.uniform(0.5, 2.0),
            rng.uniform(0.0, 2.0),
            rng.uniform(0.5, 2.0),
            rng.uniform(0.5, 3.0),
            rng.uniform(0.2, 3.0),
            rng.uniform(-np.pi / 2, np.pi / 2),
            s=s,
            n=n,
        )

    _run_oracle_grid(draw)


def test_pseudotensor_oracle_grid():
    def draw(rng, s, n):
        return case_tensor_pseudoscalar(
            rng.uniform(0.0, 2.0),
            rng.uniform(0.5, 2.0),
            rng.uniform(0.5, 2.0),
            rng.uniform(0.5, 3.0),
            rng.uniform(0.2, 3.0),
            rng.uniform(-np.pi / 2, np.pi / 2),
            s=s,
            n=n,
            pseudotensor=True,
        )

    _run_oracle_grid(draw)


def test_pseudovector_oracle_grid():
    def draw(rng, s, n):
        m, mu, W, P = rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0), rng.uniform(0.5, 3.0), rng.uniform(0.2, 3.0)
        if rng.uniform() < 0.5:
            return case_pseudovector(m, mu, 0.0, W, P, rng.uniform(0.0, np.pi), s=s, n=n)
        # q ≠ 0 only with W ⊥ 𝒫
        return case_pseudovector(m, mu, rng.uniform(-2.0, 2.0), W, P, np.pi / 2, s=s, n=n)

    _run_oracle_grid(draw)


def test_combined_w_perp_oracle_grid():
    def draw(rng, s, n):
        return case_combined_w_perp(
            rng.uniform(0.5, 2.0),
            rng.uniform(0.0, 2.0),
            rng.uniform(-1.0, 1.0),
            rng.uniform(0.5, 3.0),
            rng.uniform(0.5, 3.0),
            rng.uniform(0.2, 3.0),
            rng.uniform(-np.pi / 2, np.pi / 2),
            s=s,
            n=n,
            orientation=int(rng.choice((-1, 1))),
        )

    _run_oracle_grid(draw)


def test_combined_b_perp_oracle_grid():
    def draw(rng, s, n):
        return case_combined_b_perp(
            rng.uniform(0.5, 2.0),
            rng.uniform(0.0, 2.0),
            0.0,
            rng.uniform(0.5, 3.0),
            rng.uniform(0.5, 3.0),
            rng.uniform(0.2, 3.0),
            rng.uniform(0.0, np.pi),
            s=s,
            n=n,
        )

    _run_oracle_grid(draw)


def test_pseudoscalar_oracle_grid():
    rng = np.random.default_rng(SEED)
    for _ in range(ORACLE_SAMPLES):
        n = int(rng.integers(1, 3))
        result = case_pseudoscalar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 20.0), rng.uniform(0.0, 30.0), n=n)
        state, b = _pipeline(result, n=n)
        assert abs(state.c1 - result.c1) <= 1e-8 * max(1.0, result.c1)
        assert abs(state.lam - result.lam) <= 1e-8 * max(1.0, abs(result.lam))
        assert abs(geometric_discord(b, 1) - result.measure) <= 1e-8
        assert concurrence_wootters(state.rho) <= 1e-8


def test_pseudoscalar_discord_grid():
    m = 1.0
    grid = np.linspace(0.0, 30.0, 100)
    step = grid[1] - grid[0]
    for mu in (1.0, 5.0, 10.0, 20.0):
        measures = []
        for P in grid:
            result = case_pseudoscalar(m, mu, P)
            state, b = _pipeline(result)
            assert abs(geometric_discord(b, 1) - result.measure) <= 1e-9
            assert concurrence_wootters(state.rho) <= 1e-10
            measures.append(geometric_discord(b, 1))
        assert abs(grid[int(np.argmax(measures))] - np.sqrt(m**2 + mu**2)) <= step


def test_tensor_wootters_matches_closed_form():
    for P in (1.0, 4.0, 10.0, 100.0):
        for theta in np.linspace(0.0, np.pi / 2, 50):
            result = case_tensor_pseudoscalar(1.0, 0.0, 1.0, 1.0, P, theta)
            state, _ = _pipeline(result)
            assert _same_concurrence(concurrence_wootters(state.rho), result.concurrence)
        parallel = case_tensor_pseudoscalar(1.0, 0.0, 1.0, 1.0, P, 0.0)
        assert concurrence_wootters(_pipeline(parallel)[0].rho) <= 1e-10


def test_tensor_critical_field_pipeline():
    for P in (1.0, 4.0, 10.0, 100.0):
        result = case_tensor_pseudoscalar(1.0, 1.0, 1.0, np.sqrt(P**2 + 1.0), P, np.pi / 2, s=1)
        assert concurrence_wootters(_pipeline(result)[0].rho) <= 1e-8


def test_tensor_step_limit():
    for sin_theta in np.linspace(0.01, 1.0, 100):
        assert case_tensor_pseudoscalar(1.0, 0.0, 1.0, 1.0, 1e6, np.arcsin(sin_theta)).concurrence >= 0.999
    result = case_tensor_pseudoscalar(1.0, 0.0, 1.0, 1.0, 1e6, np.arcsin(0.01))
    assert concurrence_wootters(_pipeline(result)[0].rho) >= 0.999


def test_tensor_concurrence_nondecreasing_in_angle():
    for P in (1.0, 4.0, 10.0, 100.0):
        grid = np.arcsin(np.linspace(0, 1, 200))
        values = [case_tensor_pseudoscalar(1.0, 0.0, 1.0, 1.0, P, theta).concurrence for theta in grid]
        assert np.all(np.diff(values) >= -1e-10)


def test_pseudovector_concurrence_nonincreasing_in_cos():
    for P in (1.0, 5.0, 10.0, 100.0):
        values = [case_pseudovector(1.0, 0.0, 0.0, 1.0, P, np.arccos(c)).concurrence for c in np.linspace(0, 1, 200)]
        assert np.all(np.diff(values) <= 1e-10)
        assert values[-1] <= 1e-10


def test_pseudovector_concurrence_decreasing_in_q():
    for W in (0.75, 1.25, 1.5, 2.0):
        values = [case_pseudovector(1.0, 0.0, q, W, 1.0, np.pi / 2, s=2).concurrence for q in np.linspace(0, 100, 201)]
        assert np.all(np.diff(values) < 0)
        assert values[-1] <= 1e-3


def test_combined_a2_jumps_at_critical_angle():
    for P in (1.2, 1.5, 2.0):
        critical = critical_angle(1.0, 1.0, P, 1.0)
        assert np.isclose(np.sin(critical), 1.0 / P)
        # ω_B flips sign against W at sinθ = −sinθ_c
        below = case_combined_w_perp(0.0, 1.0, 0.0, 1.0, 1.0, P, -critical - 1e-4)
        above = case_combined_w_perp(0.0, 1.0, 0.0, 1.0, 1.0, P, -critical + 1e-4)
        assert below.a2 - above.a2 > 0.1
        assert np.isclose(below.a2, 4.0 / (P**2 + 3.0), atol=1e-3)


def test_combined_maximal_branch():
    for P in (1.2, 1.5, 2.0):
        lowest = -1.0 / P
        for sin_theta in np.linspace(lowest + 0.01, 1.0, 200):
            result = case_combined_w_perp(0.0, 1.0, 0.0, 1.0, 1.0, P, np.arcsin(sin_theta), s=1)
            assert result.concurrence >= 1 - 1e-8
        for sin_theta in (lowest + 0.1, 0.0, 0.5, 1.0):
            result = case_combined_w_perp(0.0, 1.0, 0.0, 1.0, 1.0, P, np.arcsin(sin_theta), s=1)
            assert concurrence_wootters(_pipeline(result)[0].rho) >= 1 - 1e-8


def test_pure_states_discord_is_half_concurrence_squared():
    results = []
    for theta in np.linspace(0.0, np.pi / 2, 20):
        results.append(case_tensor_pseudoscalar(1.0, 0.0, 1.0, 1.0, 4.0, theta))
        results.append(case_pseudovector(1.0, 0.0, 0.0, 1.0, 5.0, theta))
    for q in (0.0, 1.0, 10.0):
        results.append(case_pseudovector(1.0, 0.0, q, 1.5, 1.0, np.pi / 2, s=2))
    for P in (1.2, 1.5, 2.0):
        for sin_theta in (-0.95, -0.3, 0.2, 0.9):
            results.append(case_combined_w_perp(0.0, 1.0, 0.0, 1.0, 1.0, P, np.arcsin(sin_theta), s=1))
    for result in results:
        state, b = _pipeline(result)
        assert np.isclose(b.purity, 1.0, atol=1e-9)
        half_square = concurrence_wootters(state.rho) ** 2 / 2
        assert abs(geometric_discord(b, 1) - half_square) <= 1e-8
        assert abs(geometric_discord(b, 2) - half_square) <= 1e-8
