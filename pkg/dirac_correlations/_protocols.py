"""This module contains Protocol annotations for config value types"""
from typing import Protocol, runtime_checkable

from dirac_correlations._typing import Self


@runtime_checkable
class ConfigValueProtocol(Protocol):
    """A value type that knows how to read itself from a config string"""

    @classmethod
    def from_config(cls, raw: str) -> Self:
        pass  # pragma: no cover
