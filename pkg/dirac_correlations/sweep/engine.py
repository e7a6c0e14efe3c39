import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from dirac_correlations._logger import _logger_sweep as _logger
from dirac_correlations.ansatz import AnsatzInputs, build_state, check_state
from dirac_correlations.constants import CHECK_TOLERANCE
from dirac_correlations.correlations import bloch_decompose, full_report
from dirac_correlations.exceptions import ConstraintViolated, DiracCorrelationsError, NonFiniteValue
from dirac_correlations.potentials import as_vector, build_hamiltonian
from dirac_correlations.scenarios import ScenarioValidity
from dirac_correlations.sweep import DEFAULT_GEOMETRY_HANDLER, DEFAULT_OBSERVABLE_HANDLER
from dirac_correlations.sweep.base import (
    BaseGeometryStrategy,
    Case,
    Evaluation,
    GridPoint,
    Observable,
    SweepParam,
)
from dirac_correlations.sweep.schema import SweepSpec

__all__ = [
    "ResultRow",
    "ORACLE_COLUMNS",
    "CHECK_OUTPUTS",
    "sweep_header",
    "grid_points",
    "evaluate_point",
    "run_sweep",
    "check_rows",
]

STATUS_OK = "ok"
ORACLE_COLUMNS: Tuple[str, ...] = (
    "oracle_c1",
    "oracle_c2",
    "oracle_lambda",
    "oracle_a2",
    "oracle_measure",
    "oracle_validity",
)
# numeric columns compared by `check_rows`: (column, oracle column, oracle columns setting the scale)
_CHECKED: Tuple[Tuple[str, str, Tuple[str, ...]], ...] = (
    ("c1", "oracle_c1", ("oracle_c1",)),
    # c2 comes out of the cancellation H̃² − c1·I, its rounding grows with c1
    ("c2", "oracle_c2", ("oracle_c2", "oracle_c1")),
    ("lambda", "oracle_lambda", ("oracle_lambda",)),
    ("measure", "oracle_measure", ()),
)
CHECK_OUTPUTS: Tuple[Observable, ...] = (Observable.C1, Observable.C2, Observable.LAMBDA, Observable.MEASURE)

_X_HAT = as_vector((1.0, 0.0, 0.0))
_VECTOR_PARAMS = {SweepParam.P: "P", SweepParam.W: "W", SweepParam.B: "B"}
_SCALAR_PARAMS = {SweepParam.Q: "q", SweepParam.MU: "mu"}


@dataclass(frozen=True, eq=False)
class ResultRow:
    """One CSV row.

    Attributes:
        columns: header names
        values: cell values in header order; `None` renders as an empty cell
        index: position in the sweep (series-major)
        status: `ok` or the error code of the failed evaluation
    """

    columns: Tuple[str, ...]
    values: Tuple[Any, ...]
    index: int
    status: str

    def __getitem__(self, column: str) -> Any:
        return self.values[self.columns.index(column)]

    def get(self, column: str, default: Any = None) -> Any:
        if column in self.columns:
            return self[column]
        return default

    def dict(self) -> Dict[str, Any]:
        return dict(zip(self.columns, self.values))


def _outputs(spec: SweepSpec, extra: Iterable[Observable] = ()) -> Tuple[Observable, ...]:
    outputs = list(spec.outputs)
    outputs.extend(o for o in extra if o not in outputs)
    return tuple(outputs)


def sweep_header(spec: SweepSpec, oracle: bool = False, extra_outputs: Iterable[Observable] = ()) -> Tuple[str, ...]:
    """CSV header: [series], <sweep param>, status, observables, [oracle columns]"""
    header: List[str] = ["series"] if spec.series else []
    header.append(spec.sweep.param.value)
    header.append("status")
    header.extend(o.value for o in _outputs(spec, extra_outputs))
    if oracle:
        header.extend(ORACLE_COLUMNS)
        header.extend(DEFAULT_GEOMETRY_HANDLER.get(spec.resolved_geometry).extra_columns())
    return tuple(header)


def _along(reference: Any, magnitude: float) -> np.ndarray:
    ref = as_vector(reference)
    norm = np.linalg.norm(ref)
    return magnitude * (ref / norm if norm > 0 else _X_HAT)


def _apply(values: Dict[str, Any], spec: SweepSpec, param: SweepParam, value: float) -> None:
    if param is SweepParam.THETA:
        values["theta"] = value
    elif param is SweepParam.SIN_THETA:
        values["theta"] = float(np.arcsin(value))
    elif param is SweepParam.COS_THETA:
        values["theta"] = float(np.arccos(value))
    elif param is SweepParam.M:
        values["m"] = value + spec.phi_S
    elif param in _VECTOR_PARAMS:
        name = _VECTOR_PARAMS[param]
        values[name] = _along(getattr(spec, name), value)
    else:
        values[_SCALAR_PARAMS[param]] = value


def _point(spec: SweepSpec, assignments: Sequence[Tuple[SweepParam, float]]) -> GridPoint:
    values: Dict[str, Any] = {
        "m": spec.m + spec.phi_S,
        "mu": spec.mu,
        "q": spec.q,
        "kappa": spec.kappa,
        "chi": spec.chi,
        "A0": spec.A0,
        "A": as_vector(spec.A),
        "E": as_vector(spec.E),
        "P": as_vector(spec.P),
        "W": as_vector(spec.W),
        "B": as_vector(spec.B),
        "theta": spec.theta,
        "orientation": spec.orientation,
        "s": spec.s,
        "n": spec.n,
    }
    for param, value in assignments:
        _apply(values, spec, param, float(value))
    if spec.scale != 1.0:
        energy_keys = {name for name, key in SweepSpec.__spec_keys__.items() if key.energy}
        for name in energy_keys & values.keys():
            values[name] = values[name] * spec.scale
    return GridPoint(**values)


def grid_points(spec: SweepSpec) -> List[Tuple[Optional[float], float, GridPoint]]:
    """(series value, sweep value, point) in output order: series-major, then grid index"""
    series_values: Sequence[Optional[float]] = spec.series.values if spec.series else (None,)
    points = []
    for series_value in series_values:
        for value in spec.sweep.grid():
            assignments = [(spec.sweep.param, value)]
            if spec.series and series_value is not None:
                assignments.insert(0, (spec.series.param, series_value))
            points.append((series_value, float(value), _point(spec, assignments)))
    return points


def _oracle_cells(strategy: BaseGeometryStrategy, point: GridPoint, case: Case) -> Dict[str, Any]:
    cells: Dict[str, Any] = {}
    try:
        result = strategy.oracle(point, case)
    except ConstraintViolated:
        cells["oracle_validity"] = ScenarioValidity.CONSTRAINT_VIOLATED.value
        return cells
    except DiracCorrelationsError as e:
        cells["oracle_validity"] = e.code
        return cells
    if result is None:
        return cells
    cells.update(
        oracle_c1=result.c1,
        oracle_c2=result.c2,
        oracle_lambda=result.lam,
        oracle_a2=result.a2,
        oracle_measure=result.measure,
        oracle_validity=result.validity.value,
    )
    try:
        cells.update(strategy.extra_oracle(point, result))
    except DiracCorrelationsError as e:
        _logger.debug("extra oracle columns skipped: %s", e)
    return cells


def evaluate_point(
    point: GridPoint,
    case: Case,
    strategy: BaseGeometryStrategy,
    outputs: Sequence[Observable],
    oracle: bool = False,
) -> Tuple[str, Dict[str, Any]]:
    """Run potentials → ansatz → correlations for one point.

    Returns:
        (status, cells) where status is `ok` or an error code; error rows carry no observables

    Raises:
        nothing from the library: every DiracCorrelationsError becomes the status
    """
    cells: Dict[str, Any] = {}
    try:
        config = strategy.frame(point, case)
        hamiltonian = build_hamiltonian(config)
        state = build_state(AnsatzInputs(hamiltonian, s=point.s, n=point.n))
        if _logger.isEnabledFor(logging.DEBUG):
            check_state(state, hamiltonian)
        evaluation = Evaluation(
            point=point,
            case=case,
            config=config,
            state=state,
            report=full_report(state.rho),
            bloch=bloch_decompose(state.rho),
        )
        for observable in outputs:
            value = DEFAULT_OBSERVABLE_HANDLER.handle(observable, evaluation)
            if isinstance(value, float) and not np.isfinite(value):
                raise NonFiniteValue(f"`{observable.value}` = {value}")
            cells[observable.value] = value
        status = STATUS_OK
    except DiracCorrelationsError as e:
        cells = {}
        status = e.code
        _logger.warning("grid point failed with %s: %s", e.code, e)
    if oracle:
        cells.update(_oracle_cells(strategy, point, case))
    return status, cells


def run_sweep(
    spec: SweepSpec,
    oracle: bool = False,
    threads: int = 1,
    extra_outputs: Iterable[Observable] = (),
) -> List[ResultRow]:
    """Evaluate every grid point of a sweep

    Args:
        spec: parsed sweep
        oracle: append the closed-form columns of the geometry
        threads: worker threads, 0 picks a default, 1 runs serially
        extra_outputs: observables evaluated in addition to `spec.outputs`

    Returns:
        rows ordered by series value then grid index, independent of `threads`
    """
    case, geometry = spec.resolved_case, spec.resolved_geometry
    strategy = DEFAULT_GEOMETRY_HANDLER.get(geometry)
    outputs = _outputs(spec, extra_outputs)
    header = sweep_header(spec, oracle, extra_outputs)
    points = grid_points(spec)
    _logger.info("sweep start: %d points, case=%s, geometry=%s", len(points), case.value, geometry.value)

    def task(item: Tuple[Optional[float], float, GridPoint]) -> Tuple[str, Dict[str, Any]]:
        return evaluate_point(item[2], case, strategy, outputs, oracle)

    if threads == 1:
        results = [task(item) for item in points]
    else:
        with ThreadPoolExecutor(max_workers=threads or None) as executor:
            # map keeps the submission order
            results = list(executor.map(task, points))

    rows = []
    for index, ((series_value, value, _), (status, cells)) in enumerate(zip(points, results)):
        cells.update(series=series_value, status=status)
        cells[spec.sweep.param.value] = value
        rows.append(
            ResultRow(
                columns=header,
                values=tuple(cells.get(column) for column in header),
                index=index,
                status=status,
            )
        )
    failed = sum(1 for row in rows if row.status != STATUS_OK)
    _logger.info("sweep done: %d rows, %d with an error code", len(rows), failed)
    return rows


def check_rows(rows: Sequence[ResultRow], tolerance: float = CHECK_TOLERANCE) -> List[str]:
    """Compare numeric columns against the oracle on every Exact row.

    c1 and lambda are compared relative to max(1, |oracle|), c2 relative to
    max(1, |c2|, c1) and the measure absolutely.

    Returns:
        one message per mismatch, empty when everything agrees
    """
    failures = []
    for row in rows:
        if row.status != STATUS_OK or row.get("oracle_validity") != ScenarioValidity.EXACT.value:
            continue
        for column, oracle_column, scales in _CHECKED:
            numeric, expected = row.get(column), row.get(oracle_column)
            if numeric is None or expected is None:
                continue
            bound = tolerance * max([1.0] + [abs(row.get(s) or 0.0) for s in scales])
            if abs(numeric - expected) > bound:
                failures.append(
                    f"row {row.index}: {column} = {numeric:.17g}, oracle {expected:.17g} "
                    f"(|diff| = {abs(numeric - expected):.3e})"
                )
    return failures
