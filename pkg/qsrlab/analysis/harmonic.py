#!/usr/bin/env python3
"""
Least-squares demodulation of a sampled waveform at a known frequency.

The tail of the signal is fitted as c0 + cs*sin(Omega*tau) + cc*cos(Omega*tau),
which is equivalent to offset + amplitude*sin(Omega*tau - phase).
"""

import logging
import math
from typing import NamedTuple

import numpy as np

from ..core.exceptions import ArgumentError, ConditioningError
from ..core.models import Trajectory

logger = logging.getLogger(__name__)

MIN_PERIODS = 3
DEFAULT_PERIODS = 5

# Largest acceptable singular-value ratio of the design matrix
MAX_CONDITION_NUMBER = 1e8


class HarmonicFit(NamedTuple):
    """Fitted offset + amplitude*sin(Omega*tau - phase).

    ``amplitude`` is non-negative and ``phase`` lies in [0, pi); when the
    phase had to be shifted by pi to land there, ``signed_amplitude`` is
    negative.
    """
    amplitude: float
    phase: float
    offset: float
    residual: float
    signed_amplitude: float


def _fold_phase(amplitude: float, phase: float):
    if phase < 0:
        return -amplitude, phase + math.pi
    if phase >= math.pi:
        return -amplitude, phase - math.pi
    return amplitude, phase


def fit_harmonic(times: np.ndarray, values: np.ndarray, Omega: float,  # pylint: disable=invalid-name
                 n_periods: int = DEFAULT_PERIODS) -> HarmonicFit:
    """
    Fit the last n_periods drive periods of a sampled signal.

    Args:
        times: Increasing sample times
        values: Signal samples
        Omega: Known angular frequency
        n_periods: Number of trailing periods to fit (>= 3)

    Returns:
        HarmonicFit with the root-mean-square misfit as residual

    Raises:
        ArgumentError: If Omega <= 0, n_periods < 3 or the samples span less
            than n_periods periods
        ConditioningError: If the least-squares problem is near singular
    """
    if not Omega > 0:
        raise ArgumentError(f"Omega must be positive, got {Omega}")
    if n_periods < MIN_PERIODS:
        raise ArgumentError(f"n_periods must be >= {MIN_PERIODS}, got {n_periods}")
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    if times.shape != values.shape or times.ndim != 1:
        raise ArgumentError("times and values must be 1-D arrays of equal length")

    window = n_periods * 2.0 * math.pi / Omega
    if times.size < 2 or times[-1] - times[0] < window * (1.0 - 1e-12):
        span = times[-1] - times[0] if times.size else 0.0
        raise ArgumentError(
            f"signal spans {span:g} but {n_periods} periods need {window:g}")

    mask = times >= times[-1] - window * (1.0 + 1e-12)
    tau = times[mask]
    phase_arg = Omega * tau
    design = np.column_stack([np.ones_like(tau), np.sin(phase_arg), np.cos(phase_arg)])
    coef, _res, rank, singular = np.linalg.lstsq(design, values[mask], rcond=None)
    if rank < 3 or singular[0] > MAX_CONDITION_NUMBER * singular[-1]:
        raise ConditioningError(
            f"harmonic fit is ill-conditioned over {tau.size} samples (rank {rank})")

    c0, cs, cc = (float(c) for c in coef)
    misfit = values[mask] - design @ coef
    residual = float(np.sqrt(np.mean(misfit ** 2)))
    amplitude = math.hypot(cs, cc)
    signed, phase = _fold_phase(amplitude, math.atan2(-cc, cs))
    logger.debug("Harmonic fit over %d samples: amplitude=%g phase=%g residual=%g",
                 tau.size, amplitude, phase, residual)
    return HarmonicFit(amplitude=amplitude, phase=phase, offset=c0,
                       residual=residual, signed_amplitude=signed)


def extract_harmonic_response(traj: Trajectory, Omega: float,  # pylint: disable=invalid-name
                              n_periods: int = DEFAULT_PERIODS) -> HarmonicFit:
    """Fit the X(tau) series of a trajectory over its last n_periods periods.

    The amplitude is raw; divide by xi to compare with the response amplitude.
    """
    return fit_harmonic(traj.times, traj.x_values, Omega, n_periods)
