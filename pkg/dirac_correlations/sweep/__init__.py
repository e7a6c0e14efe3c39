from dirac_correlations.sweep.base import (
    Case,
    Evaluation,
    Geometry,
    GeometryHandler,
    GridPoint,
    Observable,
    ObservableHandler,
    SweepParam,
)
from dirac_correlations.sweep.geometry import *
from dirac_correlations.sweep.observables import *

DEFAULT_OBSERVABLE_HANDLER = ObservableHandler()
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.C1, StateAttribute("c1"))
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.C2, StateAttribute("c2"))
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.LAMBDA, StateAttribute("lam"))
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.PURITY, ReportAttribute("purity"))
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.VALIDITY, ValidityObservable())
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.CONCURRENCE, ReportAttribute("concurrence"))
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.EOF, ReportAttribute("eof"))
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.ENTROPY_TOTAL, ReportAttribute("entropy_total"))
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.ENTROPY_SUB1, ReportAttribute("entropy_sub1"))
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.ENTROPY_SUB2, ReportAttribute("entropy_sub2"))
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.DISCORD_GEO_1, ReportAttribute("discord_geo_1"))
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.DISCORD_GEO_2, ReportAttribute("discord_geo_2"))
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.A2, BlochModulusObservable())
DEFAULT_OBSERVABLE_HANDLER.add_method(Observable.MEASURE, MeasureObservable())

# registration order decides the default geometry of a case
DEFAULT_GEOMETRY_HANDLER = GeometryHandler()
DEFAULT_GEOMETRY_HANDLER.add_method(Geometry.EXPLICIT, ExplicitGeometry())
DEFAULT_GEOMETRY_HANDLER.add_method(Geometry.PSEUDOSCALAR, PseudoscalarGeometry())
DEFAULT_GEOMETRY_HANDLER.add_method(Geometry.TENSOR_B_IN_PLANE, TensorGeometry())
DEFAULT_GEOMETRY_HANDLER.add_method(Geometry.PSEUDOTENSOR_B_IN_PLANE, TensorGeometry(pseudotensor=True))
DEFAULT_GEOMETRY_HANDLER.add_method(Geometry.TENSOR_CRITICAL_B, CriticalTensorGeometry())
DEFAULT_GEOMETRY_HANDLER.add_method(Geometry.PSEUDOVECTOR_W_IN_PLANE, PseudovectorGeometry())
DEFAULT_GEOMETRY_HANDLER.add_method(Geometry.COMBINED_W_PERP, CombinedWPerpGeometry())
DEFAULT_GEOMETRY_HANDLER.add_method(Geometry.COMBINED_B_PERP, CombinedBPerpGeometry())

# the schema and the engine read the default handlers above
from dirac_correlations.sweep.schema import SweepSpec, parse_config  # noqa: E402
from dirac_correlations.sweep.engine import ResultRow, check_rows, run_sweep, sweep_header  # noqa: E402
from dirac_correlations.sweep.csv_writer import emit_csv  # noqa: E402
