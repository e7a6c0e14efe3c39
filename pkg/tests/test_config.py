import numpy as np
import pytest
from tests.fixtures import PSEUDOSCALAR_SWEEP, TENSOR_SWEEP, VECTOR_SWEEP

from dirac_correlations.cli import figure_path, list_figures
from dirac_correlations.exceptions import ConfigError, InvalidRange, ParseError, UnknownKey
from dirac_correlations.sweep import SweepSpec, parse_config
from dirac_correlations.sweep.base import Case, Geometry, Observable, SweepParam
from dirac_correlations.sweep.schema import DEFAULT_OUTPUTS, ConfigKey, SeriesSpec, SweepRange


def test_parse_pseudoscalar():
    spec = parse_config(PSEUDOSCALAR_SWEEP)
    assert spec.case is Case.PSEUDOSCALAR
    assert spec.resolved_geometry is Geometry.PSEUDOSCALAR
    assert spec.m == 1.0
    assert spec.mu == 1.0
    assert spec.sweep == SweepRange(SweepParam.P, 0.0, 10.0, 100)
    assert spec.grid_size == 100


def test_defaults():
    spec = parse_config(PSEUDOSCALAR_SWEEP)
    assert spec.s == 1
    assert spec.n == 2
    assert spec.kappa == 0.0
    assert spec.scale == 1.0
    assert spec.series is None
    assert tuple(spec.outputs) == DEFAULT_OUTPUTS


def test_parse_vectors():
    spec = parse_config(VECTOR_SWEEP)
    assert np.allclose(spec.W, [0.0, 0.0, 1.0])
    assert np.allclose(spec.P, [1.0, 0.0, 0.0])
    assert spec.resolved_case is Case.GENERIC
    assert spec.resolved_geometry is Geometry.EXPLICIT


def test_parse_series_and_outputs():
    spec = parse_config(TENSOR_SWEEP)
    assert spec.series == SeriesSpec(SweepParam.P, (1.0, 4.0))
    assert spec.outputs[0] is Observable.C1
    assert Observable.MEASURE in spec.outputs
    assert spec.resolved_geometry is Geometry.TENSOR_B_IN_PLANE
    assert spec.grid_size == 22


def test_geometry_defines_case():
    spec = parse_config("geometry = combined_B_perp\nmu = 1\nkappa = 1\nW = 1\nB = 1\nP = 1\nsweep = theta 0 1 5")
    assert spec.resolved_case is Case.COMBINED


def test_alias():
    spec = parse_config("phi_s = 0.5\nsweep = P 0 1 2")
    assert spec.phi_S == 0.5


def test_comments_and_blank_lines():
    spec = parse_config("\n# comment\n\nm = 2  # trailing comment\nsweep = P 0 1 2\n")
    assert spec.m == 2.0
    assert spec.line_of("m") == 4
    assert spec.line_of("sweep") == 5


def test_read_only():
    spec = parse_config(PSEUDOSCALAR_SWEEP)
    with pytest.raises(AttributeError):
        spec.m = 2.0


def test_replace():
    spec = parse_config(PSEUDOSCALAR_SWEEP)
    smaller = spec.replace(sweep=SweepRange(SweepParam.P, 0.0, 1.0, 3))
    assert smaller.sweep.count == 3
    assert smaller.m == spec.m
    assert spec.sweep.count == 100


def test_spec_keys_collected():
    assert "sweep" in SweepSpec.__spec_keys__
    assert isinstance(SweepSpec.__spec_keys__["m"], ConfigKey)
    assert SweepSpec.__spec_keys__["sweep"].required
    assert SweepSpec.__spec_keys__["m"].energy
    assert not SweepSpec.__spec_keys__["kappa"].energy
    assert SweepSpec.__spec_aliases__["phi_s"] == "phi_S"
    assert SweepSpec.resolve_key("a0") == "A0"
    assert SweepSpec.resolve_key("omega") is None


def test_init_unknown_key():
    with pytest.raises(TypeError):
        SweepSpec(sweep=SweepRange(SweepParam.P, 0.0, 1.0, 2), omega=1.0)


def test_reversed_range():
    with pytest.raises(InvalidRange) as e:
        parse_config("case = pseudoscalar\nm = 1\nsweep = P 10 0 100")
    assert e.value.line == 3


def test_single_point_range():
    with pytest.raises(InvalidRange):
        parse_config("sweep = P 0 1 1")


def test_unknown_key():
    with pytest.raises(UnknownKey) as e:
        parse_config("m = 1\nomega = 2\nsweep = P 0 1 2")
    assert e.value.key == "omega"
    assert e.value.line == 2
    assert e.value.code == "UnknownKey"


def test_malformed_line():
    with pytest.raises(ParseError) as e:
        parse_config("m 1\nsweep = P 0 1 2")
    assert e.value.line == 1


def test_bad_value():
    with pytest.raises(ParseError) as e:
        parse_config("m = abc\nsweep = P 0 1 2")
    assert e.value.line == 1


def test_duplicate_key():
    with pytest.raises(ParseError) as e:
        parse_config("m = 1\nm = 2\nsweep = P 0 1 2")
    assert e.value.line == 2


def test_missing_sweep():
    with pytest.raises(ParseError):
        parse_config("m = 1")


def test_config_errors_share_base():
    with pytest.raises(ConfigError):
        parse_config("sweep = P 0 1 2\ns = 3")


def test_invalid_orientation():
    with pytest.raises(InvalidRange):
        parse_config("geometry = combined_W_perp\norientation = 2\nsweep = theta 0 1 3")


def test_invalid_scale():
    with pytest.raises(InvalidRange):
        parse_config("scale = 0\nsweep = P 0 1 3")


def test_angle_out_of_range():
    with pytest.raises(InvalidRange):
        parse_config("case = tensor\nkappa = 1\nB = 1\nsweep = sin_theta 0 2 3")


def test_case_geometry_mismatch():
    with pytest.raises(InvalidRange) as e:
        parse_config("case = tensor\ngeometry = pseudoscalar\nsweep = P 0 1 3")
    assert e.value.line == 2


def test_parameter_outside_geometry():
    with pytest.raises(InvalidRange):
        parse_config("case = pseudoscalar\nsweep = W 0 1 3")


def test_negative_magnitude():
    with pytest.raises(InvalidRange):
        parse_config("case = tensor\nkappa = 1\nsweep = B -1 1 3")


def test_series_same_parameter():
    with pytest.raises(InvalidRange):
        parse_config("case = pseudoscalar\nseries = P 1,2\nsweep = P 0 1 3")


def test_electric_field_needs_explicit_geometry():
    with pytest.raises(InvalidRange):
        parse_config("case = tensor\nkappa = 1\nE = 0,1,0\nsweep = P 0 1 3")
    spec = parse_config("kappa = 1\nE = 0,1,0\nsweep = P 0 1 3")
    assert spec.resolved_geometry is Geometry.EXPLICIT


def test_combined_excludes_chi():
    with pytest.raises(InvalidRange):
        parse_config("case = combined\nchi = 1\nsweep = P 0 1 3")


def test_critical_geometry_needs_kappa():
    with pytest.raises(InvalidRange):
        parse_config("case = tensor\ngeometry = tensor_critical_B\nsweep = P 0 1 3")


def test_bundled_figures_parse():
    names = list_figures()
    assert names == [f"fig{i}" for i in range(1, 9)]
    for name in names:
        spec = parse_config(figure_path(name).read_text(encoding="utf-8"))
        assert spec.series is not None
        assert spec.grid_size >= 400


def test_unknown_figure():
    with pytest.raises(ConfigError):
        figure_path("fig0")
