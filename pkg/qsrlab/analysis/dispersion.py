#!/usr/bin/env python3
"""
Kinetic coefficients of the stochastic-limit dynamics.

Damping rates follow directly from the spectral density at omega_0. The
frequency shift is the principal-value integral

    sigma^beta = eps^2 * (2/pi) * PV int_0^inf J^beta(w) / (w^2 - 1) dw

evaluated on panels split at the model breakpoint and at the pole w = 1.
The pole panel is folded onto u in (0, delta) as f(1+u) + f(1-u), which is
regular because the pole is odd. The half-line is truncated at omega_max and
the plateau tail is added analytically.
"""

import logging
import math
from typing import Callable, List, NamedTuple, Tuple

from scipy.integrate import quad

from ..core.exceptions import ArgumentError, ModelDomainError, QuadratureConvergenceError
from ..core.models import Environment, KineticCoefficients, SpectralModel, SpinSystem
from .spectral import eval_J, eval_J_beta

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
DEFAULT_PANEL_LIMIT = 200

# Truncation point of the half-line and the minimum beta*omega_max for which
# coth(beta*omega/2) is 1 to double precision beyond it.
OMEGA_MAX = 1e3
MIN_TAIL_BETA_PRODUCT = 60.0

# Upper bound on the half-width of the folded pole panel
MAX_PAIR_HALF_WIDTH = 0.5


class DispersionIntegral(NamedTuple):
    """Frequency shift together with its estimated absolute error."""
    value: float
    error: float


def gamma_zero_T(system: SpinSystem, model: SpectralModel) -> float:  # pylint: disable=invalid-name
    """Zero-temperature damping rate (Delta/omega_0)^2 * J(omega_0)."""
    return system.delta ** 2 * eval_J(model, 1.0)


def gamma_beta(system: SpinSystem, model: SpectralModel, env: Environment) -> float:
    """Finite-temperature damping rate (Delta/omega_0)^2 * J^beta(omega_0)."""
    return system.delta ** 2 * eval_J_beta(model, env, 1.0)


def pair_half_width(model: SpectralModel) -> float:
    """
    Half-width of the folded panel around the pole at omega_0.

    Raises:
        ModelDomainError: If the breakpoint sits on the pole, where the
            principal value diverges logarithmically
    """
    distance = abs(model.breakpoint - 1.0)
    if distance == 0:
        raise ModelDomainError(
            "spectral breakpoint coincides with omega_0; the principal value diverges")
    return min(MAX_PAIR_HALF_WIDTH, 0.5 * distance)


def truncation_point(model: SpectralModel, env: Environment) -> float:
    """Return omega_max, raised when beta*omega_max would fall below 60."""
    omega_max = max(OMEGA_MAX, 2.0 * model.breakpoint)
    if env.temperature > 0 and omega_max * env.beta <= MIN_TAIL_BETA_PRODUCT:
        omega_max = 2.0 * MIN_TAIL_BETA_PRODUCT * env.temperature
        logger.debug("Raised truncation point to omega_max=%g for T=%g",
                     omega_max, env.temperature)
    return omega_max


def tail_correction(plateau: float, omega_max: float) -> float:
    """int_{omega_max}^inf C/(w^2 - 1) dw = (C/2) * ln((omega_max+1)/(omega_max-1))."""
    return 0.5 * plateau * math.log1p(2.0 / (omega_max - 1.0))


def _regular_panels(model: SpectralModel, half_width: float,
                    omega_max: float) -> List[Tuple[float, float]]:
    """Panels covering (0, 1-delta) and (1+delta, omega_max), split at the breakpoint."""
    cuts = [0.0, 1.0 - half_width, 1.0 + half_width, omega_max]
    edges = sorted(set(cuts + [model.breakpoint]))
    panels = []
    for lo, hi in zip(edges, edges[1:]):
        if lo == 1.0 - half_width and hi == 1.0 + half_width:
            continue
        panels.append((lo, hi))
    return panels


def _integrate_panel(func: Callable[[float], float], lo: float, hi: float,
                     epsabs: float, limit: int) -> Tuple[float, float, bool]:
    value, abserr, _info, *message = quad(
        func, lo, hi, epsabs=epsabs, epsrel=0.0, limit=limit, full_output=1)
    if message:
        logger.debug("Panel (%g, %g) did not converge: %s", lo, hi, message[0])
    return value, abserr, not message


def principal_value_integral(model: SpectralModel, env: Environment, tol: float,
                             panel_limit: int = DEFAULT_PANEL_LIMIT) -> DispersionIntegral:
    """
    Compute PV int_0^inf J^beta(w)/(w^2 - 1) dw with an absolute error <= tol.

    Raises:
        ArgumentError: If tol <= 0
        QuadratureConvergenceError: If a panel exhausts its subdivision
            budget or the summed error estimate exceeds tol
    """
    if not tol > 0:
        raise ArgumentError(f"tol must be positive, got {tol}")

    def integrand(omega: float) -> float:
        return eval_J_beta(model, env, omega) / ((omega - 1.0) * (omega + 1.0))

    def folded(u: float) -> float:
        return integrand(1.0 + u) + integrand(1.0 - u)

    half_width = pair_half_width(model)
    omega_max = truncation_point(model, env)
    panels = _regular_panels(model, half_width, omega_max)
    panel_tol = tol / (len(panels) + 1)

    total, error, converged = _integrate_panel(
        folded, 0.0, half_width, panel_tol, panel_limit)
    for lo, hi in panels:
        value, abserr, ok = _integrate_panel(integrand, lo, hi, panel_tol, panel_limit)
        total += value
        error += abserr
        converged = converged and ok
    total += tail_correction(model.plateau, omega_max)

    if not converged or error > tol:
        raise QuadratureConvergenceError(
            f"principal-value quadrature reached error {error:.3e} "
            f"(tolerance {tol:.3e}) within {panel_limit} subintervals per panel",
            estimate=total, error=error)
    return DispersionIntegral(total, error)


def sigma_beta(system: SpinSystem, model: SpectralModel, env: Environment,
               tol: float = DEFAULT_TOL,
               panel_limit: int = DEFAULT_PANEL_LIMIT) -> DispersionIntegral:
    """
    Frequency shift sigma^beta and its estimated absolute error.

    Args:
        system: Spin system (only epsilon enters, through the prefactor)
        model: Spectral model
        env: Bath temperature
        tol: Absolute tolerance on sigma^beta
        panel_limit: Subdivision budget per quadrature panel

    Returns:
        DispersionIntegral(value, error)

    Raises:
        ArgumentError: If tol <= 0
        QuadratureConvergenceError: If the tolerance cannot be met; the
            exception carries the best estimate and achieved error of
            sigma^beta
    """
    if not tol > 0:
        raise ArgumentError(f"tol must be positive, got {tol}")
    prefactor = system.epsilon ** 2 * 2.0 / math.pi
    if prefactor == 0:
        return DispersionIntegral(0.0, 0.0)
    try:
        integral = principal_value_integral(model, env, tol / prefactor, panel_limit)
    except QuadratureConvergenceError as e:
        raise QuadratureConvergenceError(
            str(e), estimate=prefactor * e.estimate, error=prefactor * e.error) from e
    return DispersionIntegral(prefactor * integral.value, prefactor * integral.error)


def kinetic_coefficients(system: SpinSystem, model: SpectralModel, env: Environment,
                         tol: float = DEFAULT_TOL,
                         panel_limit: int = DEFAULT_PANEL_LIMIT) -> KineticCoefficients:
    """
    Bundle gamma, gamma^beta, sigma^beta and omega_R^beta = 1 - sigma^beta.

    Raises:
        ArgumentError: If tol <= 0
        QuadratureConvergenceError: Propagated from :func:`sigma_beta`
    """
    shift = sigma_beta(system, model, env, tol, panel_limit)
    coefficients = KineticCoefficients(
        gamma=gamma_zero_T(system, model),
        gamma_beta=gamma_beta(system, model, env),
        sigma_beta=shift.value,
        omega_R_beta=1.0 - shift.value,
        quad_error=shift.error,
    )
    logger.debug("Coefficients at T=%g, eta=%g: %s",
                 env.temperature, model.eta, coefficients)
    return coefficients
