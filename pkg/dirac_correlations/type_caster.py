import sys
from enum import Enum
from typing import Any, Type, Union

import numpy as np

from dirac_correlations._logger import _logger_cast as _logger
from dirac_correlations._protocols import ConfigValueProtocol
from dirac_correlations._typing import NoneType, Vector3, get_args, get_origin

__all__ = ["TypeCaster"]

_NONE_LITERALS = ("", "none", "null")
_BOOL_LITERALS = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}


def _is_vector(type_hint: Type) -> bool:
    return type_hint is Vector3 or type_hint is np.ndarray or get_origin(type_hint) is np.ndarray


class TypeCaster:
    """Simple type-caster of config strings from annotation information

    Supported annotations: `float`, `int`, `str`, `bool`, `Vector3`, `List[...]`,
    `Optional[...]`, `Enum` subclasses and classes providing `from_config`.
    """

    def _typing_to_builtin(self, type_hint: Type) -> Type:
        """convert Nested generic type (like List, Optional) to object"""
        origin = get_origin(type_hint)
        args = get_args(type_hint)

        if origin is not None and args and origin is not Union and not _is_vector(type_hint):
            # Recursively convert the nested generic types
            converted_args = tuple(self._typing_to_builtin(arg) for arg in args)
            return origin[converted_args]
        return type_hint

    @staticmethod
    def _cast_vector(value: str) -> Vector3:
        parts = [p for p in value.replace(",", " ").split()]
        if len(parts) == 1:
            vector = np.array([float(parts[0]), 0.0, 0.0])
        elif len(parts) == 3:
            vector = np.array([float(p) for p in parts])
        else:
            raise ValueError(f"expected one number or an `x,y,z` triple, got `{value}`")
        vector.setflags(write=False)
        return vector

    @staticmethod
    def _cast_enum(type_hint: Type[Enum], value: str) -> Enum:
        for member in type_hint:
            if value == member.value or value.lower() == member.name.lower():
                return member
        choices = ", ".join(str(m.value) for m in type_hint)
        raise ValueError(f"`{value}` is not one of: {choices}")

    def cast(self, type_hint: Type, value: Any) -> Any:
        """cast value to given type

        Args:
            type_hint: typehint. If value is Any > ignore type cast
            value: raw config string (already typed values pass through)

        Raises:
            ValueError: if the string cannot be read as `type_hint`
        """
        if sys.version_info >= (3, 9):
            type_hint = self._typing_to_builtin(type_hint)

        origin = get_origin(type_hint)
        args = get_args(type_hint)

        # Any. Vector3 carries Any as its shape argument, so it is excluded here
        if type_hint is Any or (Any in args and not _is_vector(type_hint)):
            return value

        _logger.debug(
            "Cast type start. `value=%s`, type_annotation=%s, `origin=%s`, `args=%s`",
            value,
            type_hint,
            origin,
            args,
        )

        if value is None:
            return value
        if not isinstance(value, str):
            return value
        value = value.strip()

        # Vector3 is a parametrized ndarray, check it before generic origins
        if _is_vector(type_hint):
            _logger.debug("Vector cast %s", value)
            return self._cast_vector(value)

        if origin is not None and args:
            # list
            if origin is list:
                _logger.debug("List cast %s -> %s", args[0], value)
                return [self.cast(type_hint=args[0], value=v) for v in value.split(",") if v.strip()]
            # Optional
            elif origin is Union:
                if value.lower() in _NONE_LITERALS and NoneType in args:
                    _logger.debug("Optional cast %s", value)
                    return None
                non_none_args = [arg for arg in args if arg is not NoneType]
                if len(non_none_args) == 1:
                    return self.cast(type_hint=non_none_args[0], value=value)
            raise TypeError(f"Unsupported annotation {type_hint}")  # pragma: no cover
        elif isinstance(type_hint, type) and issubclass(type_hint, Enum):
            _logger.debug("Enum cast %s -> %s", type_hint.__name__, value)
            return self._cast_enum(type_hint, value)
        elif isinstance(type_hint, type) and issubclass(type_hint, ConfigValueProtocol):
            _logger.debug("Config value cast %s -> %s", type_hint.__name__, value)
            return type_hint.from_config(value)
        # bool cast
        elif type_hint is bool:
            _logger.debug("Bool cast %s", value)
            if value.lower() not in _BOOL_LITERALS:
                raise ValueError(f"`{value}` is not a boolean")
            return _BOOL_LITERALS[value.lower()]
        else:
            # direct cast
            _logger.debug("Direct cast %s -> %s", type_hint, value)
            return type_hint(value)
