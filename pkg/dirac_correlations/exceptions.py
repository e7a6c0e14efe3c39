from typing import Optional


class DiracCorrelationsError(Exception):
    code: str = "error"


class NumericalError(DiracCorrelationsError):
    code = "NumericalError"


class NotHermitian(NumericalError):
    code = "NotHermitian"


class NoConvergence(NumericalError):
    code = "NoConvergence"


class NegativeSpectrum(NumericalError):
    code = "NegativeSpectrum"


class NotTraceless(NumericalError):
    code = "NotTraceless"


class DegenerateEnergy(NumericalError):
    code = "DegenerateEnergy"


class UnsupportedConfiguration(NumericalError):
    code = "UnsupportedConfiguration"


class NotAState(NumericalError):
    code = "NotAState"


class NotPure(NumericalError):
    code = "NotPure"


class OutOfRange(NumericalError):
    code = "OutOfRange"


class NonFiniteValue(NumericalError):
    code = "NonFiniteValue"


class ConstraintViolated(DiracCorrelationsError):
    code = "ConstraintViolated"


class ConfigError(DiracCorrelationsError):
    code = "ConfigError"

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParseError(ConfigError):
    code = "ParseError"


class UnknownKey(ConfigError):
    code = "UnknownKey"

    def __init__(self, key: str, line: Optional[int] = None):
        self.key = key
        super().__init__(f"unknown key `{key}`", line)


class InvalidRange(ConfigError):
    code = "InvalidRange"
