#!/usr/bin/env python3
# pylint: disable=duplicate-code
"""
qsr-lab - Quantum stochastic resonance of a biased two-level system.

This package computes the kinetic coefficients of a spin coupled to a
bosonic bath, the stationary linear response to a weak periodic drive and
its signal-to-noise ratio, and scans the SNR over bath coupling and
temperature to locate resonance, anti-resonance and double resonance.

Quick Start
-----------
Kinetic coefficients and the SNR at one temperature::

    import qsrlab

    system = qsrlab.SpinSystem.from_ratio(0.35)
    model = qsrlab.SpectralModel.ohmic(0.59, 2.0)
    env = qsrlab.Environment(0.3)

    coeffs = qsrlab.kinetic_coefficients(system, model, env, tol=1e-9)
    print(f"omega_R = {coeffs.omega_R_beta:.6f}")
    print(f"R = {qsrlab.snr(coeffs, system, env, 0.10):.6g}")

Temperature Scans
-----------------
Classify the SNR curve of each bath coupling::

    import qsrlab

    spec = qsrlab.ScanSpec(
        model_family=qsrlab.SpectralKind.OHMIC,
        cutoff=2.0,
        eta_axis=(0.59, 0.65, 0.70),
        T_axis=tuple(0.01 + 0.005 * i for i in range(200)),
        system=qsrlab.SpinSystem.from_ratio(0.35),
        Omega=0.10,
    )
    result = qsrlab.scan_snr(spec)
    for report in result.classifications:
        print(report.eta, report.to_dict()["kind"], report.peak_temperatures)

Time Domain
-----------
Integrate the driven equations and compare with the closed forms::

    from qsrlab.analysis.dynamics import simulate_to_steady_state, compare_driven_response

    drive = qsrlab.Drive(xi=1e-3, Omega=0.10)
    trajectory = simulate_to_steady_state(coeffs, system, env, drive)
    comparison = compare_driven_response(trajectory, coeffs, system, env, drive)
    print(comparison.amplitude_rel_error, comparison.phase_error)

Functions
---------
kinetic_coefficients(system, model, env, tol)
    gamma, gamma_beta, sigma_beta and omega_R at one temperature.
snr(coeffs, system, env, Omega)
    Signal-to-noise ratio of the stationary response.
scan_snr(spec, threads=None)
    SNR grid over (eta, T) with one classification per eta.
run_validation_suite(tol)
    Built-in comparison of the production paths with independent oracles.
"""

from importlib.metadata import version, PackageNotFoundError

from .core.models import (
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
from .core.exceptions import QSRLabError
from .analysis.spectral import eval_J, eval_J_beta
from .analysis.dispersion import gamma_zero_T, gamma_beta, sigma_beta, kinetic_coefficients
from .analysis.response import amplitude, phase_delay, snr, stationary_X, response_point
from .analysis.dynamics import relax_closed_form, integrate_driven
from .analysis.harmonic import extract_harmonic_response
from .analysis.peaks import find_peak
from .analysis.scan import scan_snr, classify_curve
from .validation.suite import run_validation_suite

try:
    __version__ = version('qsr-lab')
except PackageNotFoundError:
    __version__ = "0.0.0"  # Package not installed

__all__ = [
    # Data models
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
    # Functions
    'eval_J',
    'eval_J_beta',
    'gamma_zero_T',
    'gamma_beta',
    'sigma_beta',
    'kinetic_coefficients',
    'amplitude',
    'phase_delay',
    'snr',
    'stationary_X',
    'response_point',
    'relax_closed_form',
    'integrate_driven',
    'extract_harmonic_response',
    'find_peak',
    'scan_snr',
    'classify_curve',
    'run_validation_suite',
]
