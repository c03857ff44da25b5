#!/usr/bin/env python3
"""
Numerical components for qsr-lab.

This package contains the spectral densities, the dispersion quadrature for
the kinetic coefficients, the stationary response, time-domain integration
and the (eta, T) scans.
"""

from .spectral import eval_J, eval_J_beta
from .dispersion import gamma_zero_T, gamma_beta, sigma_beta, kinetic_coefficients
from .response import (
    amplitude,
    phase_delay,
    snr,
    stationary_bloch,
    stationary_X,
    response_point,
)
from .dynamics import D0Relaxation, relax_closed_form, integrate_driven, thermal_populations
from .harmonic import HarmonicFit, fit_harmonic, extract_harmonic_response
from .peaks import PeakEstimate, golden_peak, find_peak
from .scan import scan_snr, classify_curve

__all__ = [
    'eval_J',
    'eval_J_beta',
    'gamma_zero_T',
    'gamma_beta',
    'sigma_beta',
    'kinetic_coefficients',
    'amplitude',
    'phase_delay',
    'snr',
    'stationary_bloch',
    'stationary_X',
    'response_point',
    'D0Relaxation',
    'relax_closed_form',
    'integrate_driven',
    'thermal_populations',
    'HarmonicFit',
    'fit_harmonic',
    'extract_harmonic_response',
    'PeakEstimate',
    'golden_peak',
    'find_peak',
    'scan_snr',
    'classify_curve',
]
