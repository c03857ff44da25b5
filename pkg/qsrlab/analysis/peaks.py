#!/usr/bin/env python3
"""
Golden-section refinement of SNR maxima in temperature.
"""

import logging
from typing import Callable, NamedTuple

import numpy as np
from scipy.optimize import minimize_scalar

from ..core.exceptions import ArgumentError, BracketError
from ..core.models import Environment, SpectralModel, SpinSystem
from .dispersion import DEFAULT_TOL, kinetic_coefficients
from .response import snr

logger = logging.getLogger(__name__)

# Absolute resolution of the refined peak location
PEAK_RESOLUTION = 1e-4

DEFAULT_BRACKET_SAMPLES = 41


class PeakEstimate(NamedTuple):
    """Location and height of a refined maximum."""
    temperature: float
    value: float


def golden_peak(func: Callable[[float], float], lo: float, hi: float,
                n_samples: int = DEFAULT_BRACKET_SAMPLES,
                resolution: float = PEAK_RESOLUTION) -> PeakEstimate:
    """
    Locate the interior maximum of func on [lo, hi].

    The bracket is sampled on a uniform grid first; the best interior sample
    and its neighbours seed a golden-section search.

    Raises:
        ArgumentError: If lo >= hi or fewer than 3 samples are requested
        BracketError: If the sampled maximum sits on an endpoint or the
            samples do not bracket a maximum
    """
    if not lo < hi:
        raise ArgumentError(f"bracket must satisfy lo < hi, got ({lo}, {hi})")
    if n_samples < 3:
        raise ArgumentError(f"n_samples must be >= 3, got {n_samples}")

    grid = np.linspace(lo, hi, n_samples)
    samples = np.array([func(float(x)) for x in grid])
    best = int(np.argmax(samples))
    if best in (0, n_samples - 1):
        raise BracketError(
            f"maximum on [{lo:g}, {hi:g}] lies on the bracket boundary at {grid[best]:g}")

    bracket = (float(grid[best - 1]), float(grid[best]), float(grid[best + 1]))
    # golden's xtol is relative to the magnitude of the abscissae
    xtol = resolution / (2.0 * max(abs(bracket[0]), abs(bracket[2]), 1.0))
    try:
        result = minimize_scalar(lambda x: -func(x), bracket=bracket, method='golden',
                                 options={'xtol': xtol})
    except ValueError as e:
        raise BracketError(f"samples do not bracket a maximum: {e}") from e

    peak = PeakEstimate(float(result.x), float(-result.fun))
    if peak.value < samples[best]:
        peak = PeakEstimate(float(grid[best]), float(samples[best]))
    logger.debug("Refined peak at %g (value %g) after %d evaluations",
                 peak.temperature, peak.value, result.nfev)
    return peak


def find_peak(system: SpinSystem, model: SpectralModel, Omega: float,  # pylint: disable=invalid-name,too-many-arguments
              T_lo: float, T_hi: float, tol: float = DEFAULT_TOL,  # pylint: disable=invalid-name
              n_samples: int = DEFAULT_BRACKET_SAMPLES) -> PeakEstimate:
    """
    Refine an SNR maximum R(T) inside a temperature bracket.

    Raises:
        ArgumentError: If T_lo >= T_hi or T_lo < 0
        BracketError: If R(T) has no interior maximum on the bracket
        QuadratureConvergenceError: Propagated from the coefficient evaluation
    """
    if T_lo < 0:
        raise ArgumentError(f"T_lo must be >= 0, got {T_lo}")

    def snr_at(temperature: float) -> float:
        env = Environment(temperature)
        coeffs = kinetic_coefficients(system, model, env, tol)
        return snr(coeffs, system, env, Omega)

    return golden_peak(snr_at, T_lo, T_hi, n_samples)
