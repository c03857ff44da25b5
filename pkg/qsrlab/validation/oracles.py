#!/usr/bin/env python3
"""
Independent evaluations of the frequency shift sigma^beta.

None of these share code paths with the folded-panel quadrature in
:mod:`qsrlab.analysis.dispersion`:

- closed_form_sigma: exact antiderivatives at T = 0.
- exclusion_sigma: the integral with a symmetric hole (1-r, 1+r) removed,
  for r = 2^-k, extrapolated to r -> 0 in odd powers of r.
- subtracted_sigma: the subtracted dispersion relation around an arbitrary
  subtraction point omega_1, with QUADPACK's Cauchy-weight rule at the pole.
"""

import logging
import math
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np
from scipy.integrate import quad

from ..analysis.dispersion import pair_half_width, truncation_point
from ..analysis.spectral import J_beta_zero_limit, eval_J_beta
from ..core.exceptions import ArgumentError, ModelDomainError
from ..core.models import Environment, SpectralKind, SpectralModel, SpinSystem

logger = logging.getLogger(__name__)

DEFAULT_EXCLUSION_EXPONENTS = (3, 4, 5, 6)

_QUAD_OPTIONS = {'epsabs': 1e-13, 'epsrel': 1e-12, 'limit': 500}


class OracleEstimate(NamedTuple):
    """Oracle value of sigma^beta with its accumulated quadrature error."""
    value: float
    error: float


def _prefactor(system: SpinSystem) -> float:
    return system.epsilon ** 2 * 2.0 / math.pi


def closed_form_sigma(system: SpinSystem, model: SpectralModel) -> float:
    """
    Exact zero-temperature sigma.

    Ohmic:    eta/2 * ln|Lambda^2 - 1| + eta*Lambda/2 * ln|(Lambda+1)/(Lambda-1)|
    Constant: eta/2 * ln|(mu+1)/(mu-1)|
    each multiplied by eps^2 * 2/pi.

    Raises:
        ModelDomainError: If the breakpoint equals omega_0
    """
    cutoff = model.cutoff
    if cutoff == 1.0:
        raise ModelDomainError("breakpoint at omega_0 has no finite closed form")
    plateau_part = 0.5 * math.log(abs((cutoff + 1.0) / (cutoff - 1.0)))
    if model.kind is SpectralKind.OHMIC:
        integral = model.eta * (0.5 * math.log(abs(cutoff ** 2 - 1.0)) + cutoff * plateau_part)
    else:
        integral = model.eta * plateau_part
    return _prefactor(system) * integral


def _edges(lo: float, hi: float, cuts: Sequence[float]) -> List[float]:
    inner = sorted(c for c in set(cuts) if lo < c < hi)
    return [lo] + inner + [hi]


def _integrate(func, lo: float, hi: float, cuts: Sequence[float] = ()) -> Tuple[float, float]:
    total, error = 0.0, 0.0
    edges = _edges(lo, hi, cuts)
    for a, b in zip(edges, edges[1:]):
        value, abserr = quad(func, a, b, **_QUAD_OPTIONS)
        total += value
        error += abserr
    return total, error


def exclusion_sigma(system: SpinSystem, model: SpectralModel, env: Environment,
                    exponents: Sequence[int] = DEFAULT_EXCLUSION_EXPONENTS) -> OracleEstimate:
    """
    Symmetric-exclusion principal value with Richardson extrapolation.

    For each r = 2^-k the integral over (0, 1-r) and (1+r, inf) is computed
    directly; the results S(r) = PV + a1 r + a3 r^3 + ... are then fitted to
    remove as many odd powers as there are extra radii.

    Raises:
        ArgumentError: If fewer than two radii are given or the largest
            radius reaches the spectral breakpoint
    """
    if len(exponents) < 2:
        raise ArgumentError("at least two exclusion radii are needed")
    radii = np.array([2.0 ** -k for k in exponents])
    if np.max(radii) >= abs(model.breakpoint - 1.0):
        raise ArgumentError("exclusion radii must stay clear of the spectral breakpoint")

    def integrand(omega: float) -> float:
        return eval_J_beta(model, env, omega) / (omega * omega - 1.0)

    sums, errors = [], []
    breakpoint = model.breakpoint
    for r in radii:
        left, left_err = _integrate(integrand, 0.0, 1.0 - r, (0.5, breakpoint))
        right, right_err = _integrate(integrand, 1.0 + r, 2.0 * max(breakpoint, 1.5),
                                      (1.5, breakpoint))
        tail, tail_err = quad(integrand, 2.0 * max(breakpoint, 1.5), np.inf,
                              **_QUAD_OPTIONS)
        sums.append(left + right + tail)
        errors.append(left_err + right_err + tail_err)

    powers = 2 * np.arange(len(radii)) - 1
    powers[0] = 0
    design = radii[:, None] ** powers[None, :]
    coefficients = np.linalg.solve(design, np.array(sums))
    # error propagation through the extrapolation weights
    weights = np.linalg.solve(design.T, np.eye(len(radii))[0])
    error = float(np.abs(weights) @ np.array(errors))
    prefactor = _prefactor(system)
    logger.debug("Exclusion oracle: S(r)=%s -> %.15g", sums, coefficients[0])
    return OracleEstimate(prefactor * float(coefficients[0]), prefactor * error)


def subtracted_sigma(system: SpinSystem, model: SpectralModel, env: Environment,
                     omega1: float = 0.0) -> OracleEstimate:
    """
    sigma^beta from the dispersion relation subtracted at omega1.

    With h(w) = (J^beta(w) - J^beta(omega1)) / (w - omega1):

        sigma/eps^2 = (1/pi) [(1 - omega1) PV int h/(w - 1) + (1 + omega1) int h/(w + 1)]

    The constant J^beta(omega1) drops out on the half-line, so every
    admissible omega1 must give the same value.

    Raises:
        ArgumentError: If omega1 is negative or not below the pole panel
    """
    half_width = pair_half_width(model)
    if not 0 <= omega1 < 1.0 - half_width:
        raise ArgumentError(f"omega1 must lie in [0, {1.0 - half_width:g}), got {omega1}")
    j1 = J_beta_zero_limit(model, env) if omega1 == 0 else eval_J_beta(model, env, omega1)
    breakpoint = model.breakpoint
    upper = truncation_point(model, env)

    def difference_quotient(omega: float) -> float:
        return (eval_J_beta(model, env, omega) - j1) / (omega - omega1)

    def below_pole(omega: float) -> float:
        return difference_quotient(omega) / (omega - 1.0)

    def above_pole(omega: float) -> float:
        return difference_quotient(omega) / (omega + 1.0)

    cuts = (omega1, breakpoint)
    left, left_err = _integrate(below_pole, 0.0, 1.0 - half_width, cuts)
    pole, pole_err = quad(difference_quotient, 1.0 - half_width, 1.0 + half_width,
                          weight='cauchy', wvar=1.0, **_QUAD_OPTIONS)
    right, right_err = _integrate(below_pole, 1.0 + half_width, upper, cuts)
    plus, plus_err = _integrate(above_pole, 0.0, upper, cuts)

    tail = (model.plateau - j1) * math.log1p(2.0 / (upper - 1.0))
    total = ((1.0 - omega1) * (left + pole + right) + (1.0 + omega1) * plus + tail) / math.pi
    error = ((1.0 - omega1) * (left_err + pole_err + right_err)
             + (1.0 + omega1) * plus_err) / math.pi
    scale = system.epsilon ** 2
    return OracleEstimate(scale * total, scale * error)
