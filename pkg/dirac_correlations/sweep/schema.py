"""Declarative config schema and the `key = value` parser.

A config file is line oriented: `key = value`, `#` starts a comment, vectors
are written `x,y,z` (a single number is taken along x̂). Example::

    case = pseudoscalar
    m = 1
    mu = 1
    sweep = P 0 10 100
"""
from typing import Any, Dict, List, NamedTuple, Optional, Tuple, Type

import numpy as np

from dirac_correlations._logger import _logger_sweep as _logger
from dirac_correlations._typing import Self, Vector3, get_type_hints
from dirac_correlations.constants import INDICES, MAX_GRID_POINTS
from dirac_correlations.exceptions import InvalidRange, ParseError, UnknownKey
from dirac_correlations.sweep import DEFAULT_GEOMETRY_HANDLER
from dirac_correlations.sweep.base import Case, Geometry, Observable, SweepParam
from dirac_correlations.type_caster import TypeCaster

__all__ = [
    "ConfigKey",
    "SpecMeta",
    "SpecConfig",
    "BaseSpec",
    "SweepRange",
    "SeriesSpec",
    "SweepSpec",
    "DEFAULT_OUTPUTS",
    "parse_config",
]

_ZERO = (0.0, 0.0, 0.0)
_ANGLE_PARAMS = (SweepParam.SIN_THETA, SweepParam.COS_THETA)
_MAGNITUDE_PARAMS = (SweepParam.P, SweepParam.W, SweepParam.B)

DEFAULT_OUTPUTS: Tuple[Observable, ...] = (
    Observable.C1,
    Observable.C2,
    Observable.LAMBDA,
    Observable.PURITY,
    Observable.VALIDITY,
    Observable.CONCURRENCE,
    Observable.EOF,
    Observable.DISCORD_GEO_1,
    Observable.DISCORD_GEO_2,
    Observable.ENTROPY_SUB2,
    Observable.MEASURE,
)


class SweepRange(NamedTuple):
    """`sweep = <param> <start> <stop> <count>`"""

    param: SweepParam
    start: float
    stop: float
    count: int

    @classmethod
    def from_config(cls, raw: str) -> "SweepRange":
        parts = raw.split()
        if len(parts) != 4:
            raise ValueError(f"expected `<param> <start> <stop> <count>`, got `{raw}`")
        param = TypeCaster().cast(SweepParam, parts[0])
        return cls(param, float(parts[1]), float(parts[2]), int(parts[3]))

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


class SeriesSpec(NamedTuple):
    """`series = <param> v1,v2,...`: one curve per value"""

    param: SweepParam
    values: Tuple[float, ...]

    @classmethod
    def from_config(cls, raw: str) -> "SeriesSpec":
        head, _, tail = raw.strip().partition(" ")
        if not tail.strip():
            raise ValueError(f"expected `<param> v1,v2,...`, got `{raw}`")
        param = TypeCaster().cast(SweepParam, head)
        values = tuple(float(v) for v in tail.replace(" ", "").split(",") if v)
        return cls(param, values)


class ConfigKey:
    def __init__(self, default: Any = ..., alias: Optional[str] = None, energy: bool = False):
        """Declarative config key

        Args:
            default: value used when the key is absent. Required key by default
            alias: alternative spelling accepted in config files
            energy: the value carries an energy unit and is multiplied by `scale`
        """
        self.default = default
        self.alias = alias
        self.energy = energy
        self.name = ""

    @property
    def required(self) -> bool:
        return self.default is ...

    def __set_name__(self, owner, name: str):
        self.name = name

    def __get__(self, instance, owner):
        if instance is None:
            return self
        return instance.__dict__.get(self.name, self.default)

    def __repr__(self):
        return f"{self.__class__.__name__}(default={self.default!r}, alias={self.alias!r}, energy={self.energy})"


class SpecMeta(type):
    """Metaclass for prefetching config keys, key annotations and alias spellings"""

    @staticmethod
    def __is_config_key(cls_spec, name: str) -> bool:
        return isinstance(cls_spec.__dict__.get(name), ConfigKey)

    def __new__(mcs, name, bases, attrs):
        __spec_keys__: Dict[str, ConfigKey] = {}  # type: ignore
        __spec_annotations__: Dict[str, Type] = {}  # type: ignore
        __spec_aliases__: Dict[str, str] = {}  # type: ignore

        cls_spec = super().__new__(mcs, name, bases, attrs)
        if cls_spec.__name__ == "BaseSpec":
            return cls_spec

        # localns={} kwarg avoid TypeError 'function' object is not subscriptable
        for key_name, type_ in get_type_hints(cls_spec, localns={}).items():
            if key_name in ("__spec_keys__", "__spec_annotations__", "__spec_aliases__"):
                continue  # pragma: no cover
            if mcs.__is_config_key(cls_spec, key_name):
                key = cls_spec.__dict__[key_name]
                __spec_keys__[key_name] = key
                __spec_annotations__[key_name] = type_
                if key.alias:
                    __spec_aliases__[key.alias] = key_name

        setattr(cls_spec, "__spec_keys__", __spec_keys__)
        setattr(cls_spec, "__spec_annotations__", __spec_annotations__)
        setattr(cls_spec, "__spec_aliases__", __spec_aliases__)
        return cls_spec


class SpecConfig:
    """BaseSpec configuration

    Attributes:
        type_caster: converts raw strings using the key annotations
        comment: comment marker
    """

    type_caster: TypeCaster = TypeCaster()
    comment: str = "#"


class BaseSpec(metaclass=SpecMeta):
    """Read-only set of config values described by `ConfigKey` attributes

    Attributes:
        __spec_keys__: Dict[str, ConfigKey] access to key objects by name
        __spec_annotations__: Dict[str, Type] access to key annotations
        __spec_aliases__: Dict[str, str] alias spelling -> key name
    """

    __spec_keys__: Dict[str, ConfigKey]
    __spec_annotations__: Dict[str, Type]
    __spec_aliases__: Dict[str, str]

    class Config(SpecConfig):
        pass

    def __init__(self, **values: Any):
        for name in values:
            if name not in self.__spec_keys__:
                raise TypeError(f"{self.__class__.__name__} has no key `{name}`")
        for name, key in self.__spec_keys__.items():
            if name in values:
                self.__dict__[name] = values[name]
            elif key.required:
                raise TypeError(f"missing required key `{name}`")

    def __setattr__(self, name: str, value: Any):
        raise AttributeError(f"{self.__class__.__name__} is read-only")

    @classmethod
    def resolve_key(cls, raw_key: str) -> Optional[str]:
        """canonical key name of a spelling, `None` when unknown"""
        if raw_key in cls.__spec_keys__:
            return raw_key
        return cls.__spec_aliases__.get(raw_key)

    @classmethod
    def _split_lines(cls, text: str) -> List[Tuple[int, str, str]]:
        entries = []
        for number, line in enumerate(text.splitlines(), start=1):
            line = line.split(cls.Config.comment, 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParseError(f"expected `key = value`, got `{line}`", number)
            raw_key, _, raw_value = line.partition("=")
            raw_key = raw_key.strip()
            if not raw_key:
                raise ParseError("empty key", number)
            entries.append((number, raw_key, raw_value.strip()))
        return entries

    @classmethod
    def from_text(cls, text: str) -> Self:
        """Parse `key = value` lines into a spec

        Raises:
            ParseError: malformed line, value of the wrong type, duplicate or missing key
            UnknownKey: key not declared on the spec class
        """
        values: Dict[str, Any] = {}
        lines: Dict[str, int] = {}
        for number, raw_key, raw_value in cls._split_lines(text):
            name = cls.resolve_key(raw_key)
            if name is None:
                raise UnknownKey(raw_key, number)
            if name in values:
                raise ParseError(f"duplicate key `{name}` (first set on line {lines[name]})", number)
            try:
                values[name] = cls.Config.type_caster.cast(cls.__spec_annotations__[name], raw_value)
            except (ValueError, TypeError) as e:
                raise ParseError(f"`{name}`: {e}", number) from e
            lines[name] = number
        for name, key in cls.__spec_keys__.items():
            if key.required and name not in values:
                raise ParseError(f"missing required key `{name}`")
        spec = cls(**values)
        spec.__dict__["__lines__"] = lines
        spec.validate()
        return spec

    def line_of(self, name: str) -> Optional[int]:
        return self.__dict__.get("__lines__", {}).get(name)

    def validate(self) -> None:
        pass

    def replace(self, **changes: Any) -> Self:
        values = {name: getattr(self, name) for name in self.__spec_keys__}
        values.update(changes)
        return self.__class__(**values)

    def dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name) for name in self.__spec_keys__}

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.dict().items())
        return f"{self.__class__.__name__}({args})"


class SweepSpec(BaseSpec):
    """Sweep description: base configuration, swept parameter and outputs.

    Couplings default to 0 and the ansatz indices to s=1, n=2. `P` is the
    kinetic momentum 𝒫; in frame geometries only the magnitudes of `P`,
    `W` and `B` are used.
    """

    m: float = ConfigKey(0.0, energy=True)
    phi_S: float = ConfigKey(0.0, alias="phi_s", energy=True)
    mu: float = ConfigKey(0.0, energy=True)
    q: float = ConfigKey(0.0, energy=True)
    kappa: float = ConfigKey(0.0)
    chi: float = ConfigKey(0.0)
    A0: float = ConfigKey(0.0, alias="a0", energy=True)
    A: Vector3 = ConfigKey(_ZERO, energy=True)
    P: Vector3 = ConfigKey(_ZERO, energy=True)
    W: Vector3 = ConfigKey(_ZERO, energy=True)
    B: Vector3 = ConfigKey(_ZERO, energy=True)
    E: Vector3 = ConfigKey(_ZERO, energy=True)
    s: int = ConfigKey(1)
    n: int = ConfigKey(2)
    case: Optional[Case] = ConfigKey(None)
    geometry: Optional[Geometry] = ConfigKey(None)
    sweep: SweepRange = ConfigKey()
    scale: float = ConfigKey(1.0)
    theta: float = ConfigKey(0.0)
    orientation: int = ConfigKey(1)
    series: Optional[SeriesSpec] = ConfigKey(None)
    outputs: List[Observable] = ConfigKey(DEFAULT_OUTPUTS)

    @property
    def resolved_case(self) -> Case:
        if self.case is not None:
            return self.case
        if self.geometry is None:
            return Case.GENERIC
        return DEFAULT_GEOMETRY_HANDLER.get(self.geometry).cases[0]

    @property
    def resolved_geometry(self) -> Geometry:
        if self.geometry is not None:
            return self.geometry
        return DEFAULT_GEOMETRY_HANDLER.default_geometry(self.resolved_case)

    @property
    def grid_size(self) -> int:
        return self.sweep.count * (len(self.series.values) if self.series else 1)

    def _fail(self, message: str, key: str) -> InvalidRange:
        return InvalidRange(message, self.line_of(key))

    def validate(self) -> None:
        """
        Raises:
            InvalidRange: naming the first key whose value cannot be swept
        """
        sweep = self.sweep
        if sweep.count < 2:
            raise self._fail(f"sweep count must be at least 2, got {sweep.count}", "sweep")
        if not sweep.stop > sweep.start:
            raise self._fail(f"sweep stop {sweep.stop:g} must exceed start {sweep.start:g}", "sweep")
        if self.grid_size > MAX_GRID_POINTS:
            raise self._fail(f"{self.grid_size} grid points exceed the limit of {MAX_GRID_POINTS}", "sweep")
        for name in ("s", "n"):
            if getattr(self, name) not in INDICES:
                raise self._fail(f"`{name}` must be 1 or 2", name)
        if self.orientation not in (1, -1):
            raise self._fail("`orientation` must be +1 or -1", "orientation")
        if not (np.isfinite(self.scale) and self.scale > 0):
            raise self._fail("`scale` must be positive", "scale")
        if not self.outputs:
            raise self._fail("`outputs` is empty", "outputs")

        geometry = self.resolved_geometry
        strategy = DEFAULT_GEOMETRY_HANDLER.get(geometry)
        case = self.resolved_case
        if case not in strategy.cases:
            raise self._fail(f"case `{case.value}` cannot be described by geometry `{geometry.value}`", "geometry")

        swept: List[Tuple[str, SweepParam, Tuple[float, ...]]] = [
            ("sweep", sweep.param, (sweep.start, sweep.stop))
        ]
        if self.series:
            if not self.series.values:
                raise self._fail("`series` has no values", "series")
            if self.series.param is sweep.param:
                raise self._fail("`series` and `sweep` vary the same parameter", "series")
            swept.append(("series", self.series.param, self.series.values))
        for key, param, values in swept:
            if param not in strategy.params:
                raise self._fail(f"`{param.value}` does not enter geometry `{geometry.value}`", key)
            if param in _ANGLE_PARAMS and (min(values) < -1 or max(values) > 1):
                raise self._fail(f"`{param.value}` must stay within [-1, 1]", key)
            if geometry is not Geometry.EXPLICIT and param in _MAGNITUDE_PARAMS and min(values) < 0:
                raise self._fail(f"`{param.value}` is a magnitude in geometry `{geometry.value}`", key)

        if geometry is not Geometry.EXPLICIT and np.any(self.E):
            raise self._fail(f"geometry `{geometry.value}` assumes E = 0", "E")
        if case is Case.COMBINED and (self.chi != 0 or np.any(self.E)):
            raise self._fail("the combined case assumes chi = 0 and E = 0", "chi" if self.chi else "E")
        if geometry is Geometry.TENSOR_CRITICAL_B and self.kappa == 0:
            raise self._fail("geometry `tensor_critical_B` needs kappa != 0", "kappa")


def parse_config(text: str) -> SweepSpec:
    """Parse a sweep config

    Args:
        text: config file contents

    Returns:
        SweepSpec

    Raises:
        ParseError, UnknownKey, InvalidRange (all carry the line number when known)
    """
    spec = SweepSpec.from_text(text)
    _logger.info(
        "parsed sweep: case=%s geometry=%s sweep=%s (%d points)",
        spec.resolved_case.value,
        spec.resolved_geometry.value,
        spec.sweep.param.value,
        spec.grid_size,
    )
    return spec
