#!/usr/bin/env python3
"""
Bath spectral densities J(omega) and their thermal form J^beta(omega).

J^beta(omega) = J(omega) * coth(beta*omega/2). Below a small crossover in
beta*omega/2 the hyperbolic cotangent is evaluated from its Laurent series so
the omega -> 0 limit (2*T*eta for the Ohmic family) is reached smoothly.
"""

import math

from ..core.exceptions import ModelDomainError
from ..core.models import Environment, SpectralKind, SpectralModel

# beta*omega/2 below which coth uses the series 1/x + x/3 - x^3/45 + 2x^5/945
COTH_SERIES_THRESHOLD = 1e-3


def _check_frequency(omega: float) -> None:
    if not omega > 0:
        raise ModelDomainError(
            f"J is defined for positive boson frequencies only, got omega={omega}")


def coth_half(beta: float, omega: float) -> float:
    """Return coth(beta*omega/2); 1 at zero temperature (beta == inf)."""
    if math.isinf(beta):
        return 1.0
    x = 0.5 * beta * omega
    if x < COTH_SERIES_THRESHOLD:
        x2 = x * x
        return 1.0 / x + x * (1.0 / 3.0 - x2 * (1.0 / 45.0 - x2 * (2.0 / 945.0)))
    return 1.0 / math.tanh(x)


def eval_J(model: SpectralModel, omega: float) -> float:
    """
    Evaluate the piecewise spectral density at a positive frequency.

    Args:
        model: Ohmic or constant-gap spectral model
        omega: Boson frequency in units of omega_0

    Returns:
        J(omega) >= 0; at the breakpoint the upper branch is used

    Raises:
        ModelDomainError: If omega <= 0
    """
    _check_frequency(omega)
    if model.kind is SpectralKind.OHMIC:
        if omega < model.cutoff:
            return model.eta * omega
        return model.eta * model.cutoff
    if omega < model.cutoff:
        return 0.0
    return model.eta


def eval_J_beta(model: SpectralModel, env: Environment, omega: float) -> float:
    """
    Evaluate the temperature-modified spectral density J(omega)*coth(beta*omega/2).

    Raises:
        ModelDomainError: If omega <= 0
    """
    j = eval_J(model, omega)
    if j == 0.0:
        return 0.0
    return j * coth_half(env.beta, omega)


def J_beta_zero_limit(model: SpectralModel, env: Environment) -> float:  # pylint: disable=invalid-name
    """Limit of J^beta(omega) as omega -> 0+ (2*T*eta for Ohmic, else 0)."""
    if model.kind is SpectralKind.OHMIC:
        return 2.0 * env.temperature * model.eta
    return 0.0
