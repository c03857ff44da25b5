#!/usr/bin/env python3
"""
Exceptions for qsr-lab.

This module contains all the custom exception classes used throughout
the kinetic-coefficient, response, dynamics and scan code.
"""

from typing import Optional


class QSRLabError(Exception):
    """Base exception for qsr-lab errors"""


class ModelDomainError(QSRLabError, ValueError):
    """Exception raised when physical parameters are outside their domain"""


class ArgumentError(QSRLabError, ValueError):
    """Exception raised when a numerical argument is invalid"""


class NumericalError(QSRLabError):
    """Base exception for numerical failures"""


class QuadratureConvergenceError(NumericalError):
    """Exception raised when a quadrature misses its tolerance.

    Carries the best available estimate and the achieved error so callers
    (e.g. the scan) can record or report them.
    """

    def __init__(self, message: str, estimate: float, error: float):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class SingularModelError(NumericalError):
    """Exception raised when gamma_beta vanishes where it is a divisor"""


class StabilityError(NumericalError):
    """Exception raised when an integrated population leaves [-1, 1]"""


class ConditioningError(NumericalError):
    """Exception raised when harmonic-fit normal equations are near singular"""


class BracketError(NumericalError):
    """Exception raised when no interior maximum exists on a bracket"""


class ConfigError(QSRLabError):
    """Exception raised when a run-config is malformed or invalid"""

    def __init__(self, message: str, field: Optional[str] = None,
                 line: Optional[int] = None):
        location = []
        if field:
            location.append(f"field '{field}'")
        if line is not None:
            location.append(f"line {line}")
        full = f"{message} ({', '.join(location)})" if location else message
        super().__init__(full)
        self.field = field
        self.line = line
