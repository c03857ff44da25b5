#!/usr/bin/env python3
"""
Time-domain evolution of the Bloch components <D+> and <D0>.

Two evolutions are provided:
- relax_closed_form: exact undriven relaxation towards the thermal state.
- integrate_driven: fixed-step classical Runge-Kutta integration of the
  driven equations, used as an independent check of the stationary
  response formulas.

Only d_plus (complex) and d0 (real) are evolved; <D-> is conj(d_plus).
"""

import cmath
import logging
import math
from enum import Enum
from typing import NamedTuple, Optional, Tuple

import numpy as np

from ..core.exceptions import ArgumentError, StabilityError
from ..core.models import (
    BLOCH_TOLERANCE,
    BlochState,
    Drive,
    Environment,
    KineticCoefficients,
    SpinSystem,
    Trajectory,
)
from .harmonic import DEFAULT_PERIODS, HarmonicFit, extract_harmonic_response
from .response import amplitude, phase_delay

logger = logging.getLogger(__name__)

# dt must not exceed this fraction of min(1, 1/Omega)
MAX_STEP_FRACTION = 0.05

DEFAULT_DT = 0.01

# Steady-state window: transients are assumed gone after this many 1/gamma_beta
STEADY_STATE_DECAY_TIMES = 8.0


class D0Relaxation(Enum):
    """Relaxation term of the driven <D0> equation.

    CONSISTENT uses -2*gamma_beta*d0 - 2*gamma, matching the undriven closed
    form. LITERAL uses -gamma_beta*d0 - gamma. Both share the fixed point
    -gamma/gamma_beta.
    """
    CONSISTENT = "consistent"
    LITERAL = "literal"


def thermal_state(env: Environment) -> BlochState:
    """Thermal fixed point (0, -tanh(beta/2))."""
    return BlochState(0j, -env.thermal_polarization)


def thermal_populations(state: BlochState) -> Tuple[float, float]:
    """Diagonal density-matrix elements (1 +/- d0)/2 of a state."""
    return state.populations


def equilibrium_populations(env: Environment) -> Tuple[float, float]:
    """Thermal populations e^{-/+ beta/2} / (2 cosh(beta/2))."""
    polarization = env.thermal_polarization
    return 0.5 * (1.0 - polarization), 0.5 * (1.0 + polarization)


def _fixed_point_ratio(coeffs: KineticCoefficients) -> float:
    """gamma/gamma_beta, equal to tanh(beta/2) for consistent coefficients."""
    return coeffs.gamma / coeffs.gamma_beta


def relax_closed_form(state0: BlochState, coeffs: KineticCoefficients,
                      env: Environment, tau: float) -> BlochState:
    """
    Exact undriven evolution of a state over a time tau.

    d_plus(tau) = d_plus(0) exp(-(gamma_beta - i omega_R) tau)
    d0(tau)     = (d0(0) + gamma/gamma_beta) exp(-2 gamma_beta tau) - gamma/gamma_beta

    When gamma_beta == 0 the state only rotates and d0 stays constant.

    Raises:
        ArgumentError: If tau < 0
    """
    if tau < 0:
        raise ArgumentError(f"tau must be >= 0, got {tau}")
    if coeffs.gamma_beta == 0:
        logger.debug("gamma_beta vanishes at T=%g; pure rotation", env.temperature)
        return BlochState(state0.d_plus * cmath.exp(1j * coeffs.omega_R_beta * tau), state0.d0)

    ratio = _fixed_point_ratio(coeffs)
    d_plus = state0.d_plus * cmath.exp(complex(-coeffs.gamma_beta, coeffs.omega_R_beta) * tau)
    d0 = (state0.d0 + ratio) * math.exp(-2.0 * coeffs.gamma_beta * tau) - ratio
    return BlochState(d_plus, d0)


def max_step(Omega: float) -> float:  # pylint: disable=invalid-name
    """Largest admissible RK4 step for a drive frequency Omega."""
    return MAX_STEP_FRACTION / max(1.0, Omega)


def steady_state_start(coeffs: KineticCoefficients) -> float:
    """Time after which the driven response is treated as stationary."""
    return STEADY_STATE_DECAY_TIMES / coeffs.gamma_beta


class _DrivenEquations:  # pylint: disable=too-few-public-methods
    """Right-hand side of the driven equations for fixed coefficients."""

    def __init__(self, coeffs: KineticCoefficients, system: SpinSystem, drive: Drive,
                 d0_relaxation: D0Relaxation):
        self.rotation = complex(-coeffs.gamma_beta, coeffs.omega_R_beta)
        self.epsilon = system.epsilon
        self.half_delta = 0.5 * system.delta
        self.xi = drive.xi
        self.omega = drive.Omega
        if d0_relaxation is D0Relaxation.CONSISTENT:
            self.d0_rate = 2.0 * coeffs.gamma_beta
            self.d0_source = 2.0 * coeffs.gamma
        else:
            self.d0_rate = coeffs.gamma_beta
            self.d0_source = coeffs.gamma

    def __call__(self, tau: float, d_plus: complex, d0: float) -> Tuple[complex, float]:
        drive = self.xi * math.sin(self.omega * tau)
        dd_plus = (self.rotation * d_plus
                   + 2j * drive * (self.epsilon * d_plus + self.half_delta * d0))
        # 2i*xi*Delta*(d+ - d-) = -4*xi*Delta*Im(d+)
        dd0 = -self.d0_rate * d0 - self.d0_source - 8.0 * drive * self.half_delta * d_plus.imag
        return dd_plus, dd0


def _rk4_step(rhs: _DrivenEquations, tau: float, d_plus: complex, d0: float,
              h: float) -> Tuple[complex, float]:
    k1p, k1z = rhs(tau, d_plus, d0)
    k2p, k2z = rhs(tau + 0.5 * h, d_plus + 0.5 * h * k1p, d0 + 0.5 * h * k1z)
    k3p, k3z = rhs(tau + 0.5 * h, d_plus + 0.5 * h * k2p, d0 + 0.5 * h * k2z)
    k4p, k4z = rhs(tau + h, d_plus + h * k3p, d0 + h * k3z)
    return (d_plus + (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p),
            d0 + (h / 6.0) * (k1z + 2.0 * k2z + 2.0 * k3z + k4z))


def integrate_driven(state0: BlochState, coeffs: KineticCoefficients,  # pylint: disable=too-many-arguments,too-many-locals
                     system: SpinSystem, env: Environment, drive: Drive,
                     tau_end: float, dt: float = DEFAULT_DT,
                     d0_relaxation: D0Relaxation = D0Relaxation.CONSISTENT) -> Trajectory:
    """
    Integrate the driven equations from tau = 0 to tau_end with classic RK4.

    The horizon is split into ceil(tau_end/dt) equal steps, so the step used
    never exceeds dt. Every step is recorded.

    Args:
        state0: Initial Bloch state
        coeffs: Kinetic coefficients at the bath temperature
        system: Spin system (epsilon and delta enter the drive coupling)
        env: Bath temperature
        drive: Drive amplitude and frequency
        tau_end: Final time (> 0)
        dt: Maximum step, 0 < dt <= 0.05/max(1, Omega)
        d0_relaxation: Form of the <D0> relaxation term

    Returns:
        Trajectory including the initial state

    Raises:
        ArgumentError: If tau_end <= 0 or dt is outside its admissible range
        StabilityError: If d0 leaves [-1 - 1e-6, 1 + 1e-6]
    """
    if not tau_end > 0:
        raise ArgumentError(f"tau_end must be positive, got {tau_end}")
    limit = max_step(drive.Omega)
    if not 0 < dt <= limit:
        raise ArgumentError(
            f"dt={dt} is outside (0, {limit:g}]; reduce the step to at most "
            f"0.05/max(1, Omega)")

    n_steps = int(math.ceil(tau_end / dt))
    h = tau_end / n_steps
    logger.debug("Integrating %d RK4 steps of %g up to tau=%g at T=%g (%s)",
                 n_steps, h, tau_end, env.temperature, d0_relaxation.value)

    rhs = _DrivenEquations(coeffs, system, drive, d0_relaxation)
    times = h * np.arange(n_steps + 1, dtype=float)
    times[-1] = tau_end
    d_plus_values = np.empty(n_steps + 1, dtype=complex)
    d0_values = np.empty(n_steps + 1, dtype=float)

    d_plus, d0 = state0.d_plus, state0.d0
    d_plus_values[0], d0_values[0] = d_plus, d0
    for step in range(n_steps):
        d_plus, d0 = _rk4_step(rhs, step * h, d_plus, d0, h)
        if abs(d0) > 1.0 + BLOCH_TOLERANCE:
            raise StabilityError(
                f"d0={d0:.9g} left [-1, 1] at tau={(step + 1) * h:g}; "
                f"reduce dt (currently {dt:g}) or the drive amplitude xi={drive.xi:g}")
        d_plus_values[step + 1] = d_plus
        d0_values[step + 1] = d0

    x_values = system.epsilon * d0_values - 2.0 * system.delta * d_plus_values.real
    return Trajectory(times=times, d_plus=d_plus_values, d0=d0_values, x_values=x_values)


def closed_form_deviation(traj: Trajectory, coeffs: KineticCoefficients,
                          env: Environment) -> float:
    """Largest |state - closed-form state| along an undriven trajectory."""
    state0 = BlochState(complex(traj.d_plus[0]), float(traj.d0[0]))
    deviation = 0.0
    for tau, d_plus, d0 in zip(traj.times, traj.d_plus, traj.d0):
        exact = relax_closed_form(state0, coeffs, env, float(tau))
        deviation = max(deviation, abs(complex(d_plus) - exact.d_plus), abs(float(d0) - exact.d0))
    return deviation


def trajectory_rows(traj: Trajectory):
    """Yield (tau, re_dplus, im_dplus, d0, x) rows for CSV export."""
    for tau, d_plus, d0, x in zip(traj.times, traj.d_plus, traj.d0, traj.x_values):
        yield float(tau), float(d_plus.real), float(d_plus.imag), float(d0), float(x)


class ResponseComparison(NamedTuple):
    """Harmonic fit of a driven trajectory next to the closed-form response."""
    fit: HarmonicFit
    closed_amplitude: float
    closed_phase: float
    fitted_amplitude: float
    amplitude_rel_error: float
    phase_error: float


def compare_driven_response(trajectory: Trajectory, coeffs: KineticCoefficients,  # pylint: disable=too-many-arguments
                            system: SpinSystem, env: Environment, drive: Drive,
                            n_periods: int = DEFAULT_PERIODS) -> ResponseComparison:
    """
    Demodulate X(tau) over the last n_periods and compare with |A| and phi.

    Raises:
        ArgumentError: If xi == 0 or the trajectory is too short
        ConditioningError: Propagated from the harmonic fit
    """
    if drive.xi == 0:
        raise ArgumentError("comparison with the response needs xi > 0")
    fit = extract_harmonic_response(trajectory, drive.Omega, n_periods)
    closed_amplitude = abs(amplitude(coeffs, system, env, drive.Omega))
    closed_phase = phase_delay(coeffs, drive.Omega)
    fitted = fit.amplitude / drive.xi
    rel_error = (abs(fitted - closed_amplitude) / closed_amplitude
                 if closed_amplitude > 0 else fitted)
    # phases are compared on the circle of period pi
    phase_error = abs(math.remainder(fit.phase - closed_phase, math.pi))
    return ResponseComparison(fit, closed_amplitude, closed_phase, fitted, rel_error, phase_error)


def simulate_to_steady_state(coeffs: KineticCoefficients, system: SpinSystem,  # pylint: disable=too-many-arguments
                             env: Environment, drive: Drive, dt: float = DEFAULT_DT,
                             n_periods: int = DEFAULT_PERIODS,
                             d0_relaxation: D0Relaxation = D0Relaxation.CONSISTENT,
                             state0: Optional[BlochState] = None) -> Trajectory:
    """Integrate from the thermal state (or state0) until 8/gamma_beta + n_periods periods."""
    tau_end = steady_state_start(coeffs) + n_periods * drive.period
    start = state0 if state0 is not None else thermal_state(env)
    return integrate_driven(start, coeffs, system, env, drive, tau_end, dt, d0_relaxation)
