"""Tests for the least-squares harmonic fit."""

import math

import numpy as np
import pytest

from qsrlab.analysis.harmonic import extract_harmonic_response, fit_harmonic
from qsrlab.core.exceptions import ArgumentError, ConditioningError
from qsrlab.core.models import Trajectory

OMEGA = 0.10
PERIOD = 2 * math.pi / OMEGA


def _signal(amplitude, phase, offset=0.3, periods=8.0, n=4000):
    times = np.linspace(0.0, periods * PERIOD, n)
    return times, offset + amplitude * np.sin(OMEGA * times - phase)


class TestFitHarmonic:
    """Recovery of offset, amplitude and phase."""

    def test_recovers_parameters(self):
        """A pure sinusoid is fitted exactly."""
        times, values = _signal(0.2, 0.7)
        fit = fit_harmonic(times, values, OMEGA)
        assert fit.amplitude == pytest.approx(0.2, abs=1e-12)
        assert fit.phase == pytest.approx(0.7, abs=1e-10)
        assert fit.offset == pytest.approx(0.3, abs=1e-12)
        assert fit.signed_amplitude == pytest.approx(0.2, abs=1e-12)
        assert fit.residual < 1e-12

    def test_negative_amplitude_is_folded(self):
        """-A sin(x - p) is reported as phase p with a negative signed amplitude."""
        times, values = _signal(-0.2, 0.7)
        fit = fit_harmonic(times, values, OMEGA)
        assert fit.amplitude == pytest.approx(0.2, abs=1e-12)
        assert fit.phase == pytest.approx(0.7, abs=1e-10)
        assert fit.signed_amplitude == pytest.approx(-0.2, abs=1e-12)

    def test_only_trailing_window_is_used(self):
        """An early transient outside the window does not affect the fit."""
        times, values = _signal(0.05, 1.2, periods=10.0)
        values = values + np.where(times < 3 * PERIOD, 5.0, 0.0)
        fit = fit_harmonic(times, values, OMEGA, n_periods=5)
        assert fit.amplitude == pytest.approx(0.05, abs=1e-12)
        assert fit.phase == pytest.approx(1.2, abs=1e-9)

    def test_residual_measures_noise(self):
        """The residual is the RMS misfit."""
        rng = np.random.default_rng(3)
        times, values = _signal(0.1, 0.4, n=20000)
        noise = 1e-3 * rng.standard_normal(times.size)
        fit = fit_harmonic(times, values + noise, OMEGA)
        assert fit.residual == pytest.approx(1e-3, rel=0.05)
        assert fit.amplitude == pytest.approx(0.1, abs=1e-4)

    def test_extract_from_trajectory(self):
        """The trajectory X series is fitted."""
        times, values = _signal(0.02, 0.3)
        zeros = np.zeros_like(times)
        trajectory = Trajectory(times=times, d_plus=zeros.astype(complex), d0=zeros,
                                x_values=values)
        fit = extract_harmonic_response(trajectory, OMEGA)
        assert fit.amplitude == pytest.approx(0.02, abs=1e-12)


class TestFitHarmonicErrors:
    """Invalid inputs."""

    def test_too_short(self):
        """The signal must span n_periods periods."""
        times, values = _signal(0.2, 0.7, periods=4.0)
        with pytest.raises(ArgumentError):
            fit_harmonic(times, values, OMEGA, n_periods=5)

    def test_too_few_periods_requested(self):
        """At least three periods are fitted."""
        times, values = _signal(0.2, 0.7)
        with pytest.raises(ArgumentError):
            fit_harmonic(times, values, OMEGA, n_periods=2)

    def test_non_positive_frequency(self):
        """Omega must be positive."""
        times, values = _signal(0.2, 0.7)
        with pytest.raises(ArgumentError):
            fit_harmonic(times, values, 0.0)

    def test_aliased_sampling(self):
        """Samples at the zeros of sin leave the fit singular."""
        times = np.array([0.0, 2.5, 5.0]) * PERIOD
        with pytest.raises(ConditioningError):
            fit_harmonic(times, np.ones(3), OMEGA, n_periods=5)
