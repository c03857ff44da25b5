#!/usr/bin/env python3
"""
SNR sweeps over the (eta, T) plane and resonance classification of R(T).

Cells are independent and may be evaluated on a thread pool; results are
always reduced in row-major order (eta outer, T inner) so the output does
not depend on the number of workers. A cell whose coefficients cannot be
computed is kept as NaN and skipped by the classification.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy.signal import find_peaks

from ..core.exceptions import ArgumentError, NumericalError
from ..core.models import (
    Environment,
    ResonanceKind,
    ResonanceReport,
    ScanResult,
    ScanSpec,
    SpectralModel,
    SpinSystem,
)
from .dispersion import DEFAULT_PANEL_LIMIT, DEFAULT_TOL, kinetic_coefficients
from .response import amplitude, phase_delay, snr

logger = logging.getLogger(__name__)

MIN_CURVE_SAMPLES = 30

# Peak prominence and anti-resonance depth, relative to max(R)
PROMINENCE_FRACTION = 1e-3
DIP_FRACTION = 1e-2

# Grid steps on either side of an omega_R zero crossing searched for the dip
DIP_NEIGHBOURHOOD = 2


class CellValues(NamedTuple):
    """Response and coefficients at one (eta, T) grid point."""
    eta: float
    temperature: float
    snr: float
    amplitude: float
    phase: float
    omega_R: float  # pylint: disable=invalid-name
    gamma_beta: float
    sigma_beta: float


def evaluate_cell(system: SpinSystem, model: SpectralModel, temperature: float,  # pylint: disable=too-many-arguments
                  Omega: float, tol: float = DEFAULT_TOL,  # pylint: disable=invalid-name
                  panel_limit: int = DEFAULT_PANEL_LIMIT) -> CellValues:
    """
    Compute coefficients and response at one temperature.

    Numerical failures produce a cell filled with NaN instead of raising.
    """
    env = Environment(temperature)
    try:
        coeffs = kinetic_coefficients(system, model, env, tol, panel_limit)
        return CellValues(
            eta=model.eta,
            temperature=temperature,
            snr=snr(coeffs, system, env, Omega),
            amplitude=amplitude(coeffs, system, env, Omega),
            phase=phase_delay(coeffs, Omega),
            omega_R=coeffs.omega_R_beta,
            gamma_beta=coeffs.gamma_beta,
            sigma_beta=coeffs.sigma_beta,
        )
    except NumericalError as e:
        logger.debug("Cell eta=%g T=%g failed: %s", model.eta, temperature, e)
        nan = math.nan
        return CellValues(model.eta, temperature, nan, nan, nan, nan, nan, nan)


def evaluate_curve(system: SpinSystem, model: SpectralModel, T_axis: Sequence[float],  # pylint: disable=invalid-name,too-many-arguments
                   Omega: float, tol: float = DEFAULT_TOL,  # pylint: disable=invalid-name
                   threads: Optional[int] = None,
                   panel_limit: int = DEFAULT_PANEL_LIMIT) -> List[CellValues]:
    """Evaluate every temperature of T_axis for one spectral model, in order."""
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(
            lambda temperature: evaluate_cell(system, model, float(temperature), Omega, tol,
                                              panel_limit),
            T_axis))


def _smooth(values: np.ndarray) -> np.ndarray:
    """Three-point moving average; the end points are kept."""
    smoothed = values.copy()
    smoothed[1:-1] = (values[:-2] + values[1:-1] + values[2:]) / 3.0
    return smoothed


def _zero_crossings(T_axis: np.ndarray, omega_R: np.ndarray) -> Iterator[Tuple[int, float]]:  # pylint: disable=invalid-name
    """Yield (index, interpolated T) for each sign change of omega_R."""
    for i in range(len(omega_R) - 1):
        left, right = omega_R[i], omega_R[i + 1]
        if left == 0:
            yield i, float(T_axis[i])
        elif left * right < 0:
            fraction = left / (left - right)
            yield i, float(T_axis[i] + fraction * (T_axis[i + 1] - T_axis[i]))


def _extrapolate(T_axis: np.ndarray, R: np.ndarray,  # pylint: disable=invalid-name
                 first: int, second: int, target: float) -> float:
    """Value at target of the straight line through samples first and second."""
    slope = (R[second] - R[first]) / (T_axis[second] - T_axis[first])
    return float(R[first] + slope * (target - T_axis[first]))


def _depth_at_crossing(T_axis: np.ndarray, R: np.ndarray,  # pylint: disable=invalid-name
                       index: int, crossing: float) -> float:
    """
    Estimate R at an omega_R zero crossing between samples index and index+1.

    R is extended onto the crossing from each side separately, using the two
    nearest samples on that side, and the smaller estimate is kept.
    """
    estimates = []
    if index >= 1:
        estimates.append(_extrapolate(T_axis, R, index - 1, index, crossing))
    if index + 2 < len(R):
        estimates.append(_extrapolate(T_axis, R, index + 2, index + 1, crossing))
    if not estimates:
        estimates = [float(R[index]), float(R[index + 1])]
    return max(0.0, min(estimates))


def _find_dip(T_axis: np.ndarray, R: np.ndarray,  # pylint: disable=invalid-name
              omega_R: np.ndarray) -> Optional[Tuple[float, float]]:
    """Return (T_dip, T_zero) for the first omega_R crossing where R drops to a deep minimum."""
    threshold = DIP_FRACTION * float(np.max(R))
    for index, crossing in _zero_crossings(T_axis, omega_R):
        if _depth_at_crossing(T_axis, R, index, crossing) >= threshold:
            continue
        lo = max(0, index - DIP_NEIGHBOURHOOD)
        hi = min(len(R), index + 1 + DIP_NEIGHBOURHOOD + 1)
        local = lo + int(np.argmin(R[lo:hi]))
        return float(T_axis[local]), crossing
    return None


def classify_curve(T_axis: Sequence[float], R_values: Sequence[float],  # pylint: disable=invalid-name
                   omega_R_values: Sequence[float],
                   eta: Optional[float] = None) -> ResonanceReport:
    """
    Classify one SNR-versus-temperature curve.

    Interior maxima of the 3-point smoothed curve with prominence at least
    1e-3*max(R) count as peaks. An anti-resonance needs a sign change of
    omega_R where R, extended linearly onto the interpolated crossing from
    the samples on either side, falls below 1e-2*max(R). The reported dip
    temperature is the smallest sampled R within two grid steps of it.

    Args:
        T_axis: Strictly increasing temperatures (at least 30)
        R_values: SNR values, non-negative
        omega_R_values: Renormalized frequency at the same temperatures
        eta: Noise strength recorded in the report

    Returns:
        ResonanceReport; with more than two peaks and no dip the two most
        prominent are reported as DoubleResonance

    Raises:
        ArgumentError: If the axes differ in length, T_axis is not strictly
            increasing, fewer than 30 samples are given or some R < 0
    """
    temps = np.asarray(T_axis, dtype=float)
    R = np.asarray(R_values, dtype=float)  # pylint: disable=invalid-name
    omega_R = np.asarray(omega_R_values, dtype=float)  # pylint: disable=invalid-name
    if not temps.shape == R.shape == omega_R.shape:
        raise ArgumentError("T_axis, R_values and omega_R_values must have equal lengths")
    if temps.size < MIN_CURVE_SAMPLES:
        raise ArgumentError(
            f"classification needs at least {MIN_CURVE_SAMPLES} samples, got {temps.size}")
    if np.any(np.diff(temps) <= 0):
        raise ArgumentError("T_axis must be strictly increasing")
    if np.any(R < 0):
        raise ArgumentError("R_values must be non-negative")

    r_max = float(np.max(R))
    if r_max == 0:
        return ResonanceReport(ResonanceKind.NO_RESONANCE, eta=eta)

    peaks, properties = find_peaks(_smooth(R), prominence=PROMINENCE_FRACTION * r_max)
    if len(peaks) > 2:
        strongest = np.argsort(properties['prominences'])[::-1][:2]
        top_two = np.sort(peaks[strongest])
    else:
        top_two = peaks
    peak_temperatures = tuple(float(temps[i]) for i in peaks)

    dip = _find_dip(temps, R, omega_R)
    if dip is not None:
        return ResonanceReport(ResonanceKind.ANTI_RESONANCE, peak_temperatures,
                               dip_temperature=dip[0], omega_R_zero_crossing=dip[1], eta=eta)
    if len(peaks) == 0:
        return ResonanceReport(ResonanceKind.NO_RESONANCE, eta=eta)
    if len(peaks) == 1:
        return ResonanceReport(ResonanceKind.SINGLE_RESONANCE, peak_temperatures, eta=eta)
    if len(peaks) > 2:
        logger.debug("Found %d peaks at eta=%s; keeping the two most prominent",
                     len(peaks), eta)
    return ResonanceReport(ResonanceKind.DOUBLE_RESONANCE,
                           tuple(float(temps[i]) for i in top_two), eta=eta)


def _classify_row(spec: ScanSpec, eta: float, R: np.ndarray,  # pylint: disable=invalid-name
                  omega_R: np.ndarray) -> ResonanceReport:  # pylint: disable=invalid-name
    finite = np.isfinite(R) & np.isfinite(omega_R)
    temps = np.asarray(spec.T_axis)[finite]
    try:
        return classify_curve(temps, R[finite], omega_R[finite], eta=eta)
    except ArgumentError as e:
        logger.warning("Row eta=%g left unclassified: %s", eta, e)
        return ResonanceReport(None, eta=eta)


def scan_snr(spec: ScanSpec, threads: Optional[int] = None) -> ScanResult:
    """
    Evaluate R, omega_R, gamma_beta and sigma_beta on the (eta, T) grid.

    Args:
        spec: Grid and model definition
        threads: Worker threads for cell evaluation (None lets the executor decide)

    Returns:
        ScanResult with one classification per eta row; a row with too few
        finite cells gets a report whose kind is None
    """
    n_eta, n_temp = spec.shape
    grid_points = [(eta, temperature) for eta in spec.eta_axis for temperature in spec.T_axis]
    logger.info("Scanning %d x %d grid (%s, cutoff %g)",
                n_eta, n_temp, spec.model_family.value, spec.cutoff)

    def evaluate(point: Tuple[float, float]) -> CellValues:
        eta, temperature = point
        return evaluate_cell(spec.system, spec.model_for(eta), temperature, spec.Omega,
                             spec.tol, spec.panel_limit)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        cells = list(pool.map(evaluate, grid_points))

    def grid(attribute: str) -> np.ndarray:
        return np.array([getattr(c, attribute) for c in cells], dtype=float).reshape(n_eta, n_temp)

    snr_grid = grid('snr')
    omega_R_grid = grid('omega_R')  # pylint: disable=invalid-name
    reports = tuple(_classify_row(spec, eta, snr_grid[i], omega_R_grid[i])
                    for i, eta in enumerate(spec.eta_axis))

    result = ScanResult(
        spec=spec,
        snr_grid=snr_grid,
        omega_R_grid=omega_R_grid,
        gamma_beta_grid=grid('gamma_beta'),
        sigma_beta_grid=grid('sigma_beta'),
        classifications=reports,
    )
    if result.missing_cells:
        logger.warning("%d of %d scan cells failed and are recorded as nan",
                       result.missing_cells, n_eta * n_temp)
    return result


def scan_rows(result: ScanResult) -> Iterator[Tuple[float, ...]]:
    """Yield (eta, T, snr, omega_R, gamma_beta, sigma_beta) rows in row-major order."""
    for i, eta in enumerate(result.spec.eta_axis):
        for j, temperature in enumerate(result.spec.T_axis):
            yield (eta, temperature, float(result.snr_grid[i, j]),
                   float(result.omega_R_grid[i, j]), float(result.gamma_beta_grid[i, j]),
                   float(result.sigma_beta_grid[i, j]))
