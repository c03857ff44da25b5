#!/usr/bin/env python3
# pylint: disable=duplicate-code
"""
Core components for qsr-lab.

This package contains the immutable data models shared by the analysis
modules and the exception hierarchy.
"""

from .models import (
    SpectralKind,
    SpectralModel,
    Environment,
    SpinSystem,
    KineticCoefficients,
    Drive,
    ResponsePoint,
    BlochState,
    Trajectory,
    ResonanceKind,
    ResonanceReport,
    ScanSpec,
    ScanResult,
)
from .exceptions import (
    QSRLabError,
    ModelDomainError,
    ArgumentError,
    NumericalError,
    QuadratureConvergenceError,
    SingularModelError,
    StabilityError,
    ConditioningError,
    BracketError,
    ConfigError,
)

__all__ = [
    'SpectralKind',
    'SpectralModel',
    'Environment',
    'SpinSystem',
    'KineticCoefficients',
    'Drive',
    'ResponsePoint',
    'BlochState',
    'Trajectory',
    'ResonanceKind',
    'ResonanceReport',
    'ScanSpec',
    'ScanResult',
    'QSRLabError',
    'ModelDomainError',
    'ArgumentError',
    'NumericalError',
    'QuadratureConvergenceError',
    'SingularModelError',
    'StabilityError',
    'ConditioningError',
    'BracketError',
    'ConfigError',
]
