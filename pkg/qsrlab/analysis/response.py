#!/usr/bin/env python3
"""
Stationary O(xi) response of the driven two-level system.

The coefficient functions (amplitude, phase delay, SNR) do not depend on the
drive strength; only the waveform helpers take a :class:`Drive`.
"""

import cmath
import logging
import math
from typing import Tuple

from ..core.exceptions import ModelDomainError, SingularModelError
from ..core.models import Drive, Environment, KineticCoefficients, ResponsePoint, SpinSystem

logger = logging.getLogger(__name__)


def _check_drive_frequency(Omega: float) -> None:  # pylint: disable=invalid-name
    if not Omega > 0:
        raise ModelDomainError(f"Omega must be positive, got {Omega}")


def _resonance_denominator(coeffs: KineticCoefficients, Omega: float) -> float:  # pylint: disable=invalid-name
    return coeffs.omega_R_beta ** 2 - Omega ** 2 + coeffs.gamma_beta ** 2


def amplitude(coeffs: KineticCoefficients, system: SpinSystem, env: Environment,
              Omega: float) -> float:  # pylint: disable=invalid-name
    """
    Signed response amplitude A^beta(Omega).

    A = 2 Delta^2 omega_R tanh(beta/2) / sqrt((omega_R^2 - Omega^2 + gamma^2)^2 + (2 gamma Omega)^2)
    with gamma = gamma^beta and omega_R = omega_R^beta. The sign follows omega_R.

    Raises:
        ModelDomainError: If Omega <= 0
    """
    _check_drive_frequency(Omega)
    numerator = 2.0 * system.delta ** 2 * coeffs.omega_R_beta * env.thermal_polarization
    if numerator == 0:
        return 0.0
    magnitude = math.hypot(_resonance_denominator(coeffs, Omega),
                           2.0 * coeffs.gamma_beta * Omega)
    return numerator / magnitude


def phase_delay(coeffs: KineticCoefficients, Omega: float) -> float:  # pylint: disable=invalid-name
    """
    Phase lag phi in [0, pi) of the response behind the drive.

    Raises:
        ModelDomainError: If Omega <= 0
    """
    _check_drive_frequency(Omega)
    phi = math.atan2(2.0 * coeffs.gamma_beta * Omega, _resonance_denominator(coeffs, Omega))
    # atan2 returns pi when the numerator vanishes on the negative axis
    if phi >= math.pi:
        phi -= math.pi
    return phi


def snr(coeffs: KineticCoefficients, system: SpinSystem, env: Environment,
        Omega: float) -> float:  # pylint: disable=invalid-name
    """
    Signal-to-noise ratio R = |A| / gamma^beta.

    Raises:
        ModelDomainError: If Omega <= 0
        SingularModelError: If gamma^beta == 0 (decoupled case)
    """
    if coeffs.gamma_beta == 0:
        raise SingularModelError("gamma_beta vanishes; the SNR is undefined")
    return abs(amplitude(coeffs, system, env, Omega)) / coeffs.gamma_beta


def equilibrium_x(system: SpinSystem, env: Environment) -> float:
    """Thermal equilibrium value X_eq = -epsilon * tanh(beta/2)."""
    return -system.epsilon * env.thermal_polarization


def stationary_bloch(coeffs: KineticCoefficients, system: SpinSystem, env: Environment,
                     drive: Drive, tau: float) -> Tuple[complex, float]:
    """
    Stationary O(xi) solution (<D+>, <D0>) of the driven equations.

    <D0> stays at -tanh(beta/2); <D+> is the sum of co- and counter-rotating
    terms with denominators (omega_R - Omega) + i gamma and
    (omega_R + Omega) + i gamma.

    Returns:
        Tuple (d_plus, d0); d_minus is conj(d_plus)
    """
    polarization = env.thermal_polarization
    d0 = -polarization
    if drive.xi == 0:
        return 0j, d0
    rotating = cmath.exp(1j * drive.Omega * tau) / complex(
        coeffs.omega_R_beta - drive.Omega, coeffs.gamma_beta)
    counter_rotating = cmath.exp(-1j * drive.Omega * tau) / complex(
        coeffs.omega_R_beta + drive.Omega, coeffs.gamma_beta)
    d_plus = -0.5j * drive.xi * system.delta * polarization * (rotating - counter_rotating)
    return d_plus, d0


def x_from_bloch(system: SpinSystem, d_plus: complex, d0: float) -> float:
    """Recombine X = epsilon*D0 - Delta*(D+ + D-) = epsilon*d0 - 2*Delta*Re(d_plus)."""
    return system.epsilon * d0 - 2.0 * system.delta * d_plus.real


def stationary_X(coeffs: KineticCoefficients, system: SpinSystem, env: Environment,  # pylint: disable=invalid-name
                 drive: Drive, tau: float) -> float:
    """X(tau) = -epsilon*tanh(beta/2) + xi*A*sin(Omega*tau - phi)."""
    x_eq = equilibrium_x(system, env)
    if drive.xi == 0:
        return x_eq
    signal = amplitude(coeffs, system, env, drive.Omega)
    phi = phase_delay(coeffs, drive.Omega)
    return x_eq + drive.xi * signal * math.sin(drive.Omega * tau - phi)


def response_point(coeffs: KineticCoefficients, system: SpinSystem, env: Environment,
                   Omega: float) -> ResponsePoint:  # pylint: disable=invalid-name
    """
    Bundle amplitude, phase, SNR and equilibrium offset at one drive frequency.

    Raises:
        ModelDomainError: If Omega <= 0
        SingularModelError: If gamma^beta == 0
    """
    return ResponsePoint(
        amplitude=amplitude(coeffs, system, env, Omega),
        phase=phase_delay(coeffs, Omega),
        snr=snr(coeffs, system, env, Omega),
        x_eq=equilibrium_x(system, env),
    )
