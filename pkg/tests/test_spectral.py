"""Tests for the spectral density module."""

import math

import mpmath
import pytest

from qsrlab.analysis.spectral import (
    COTH_SERIES_THRESHOLD,
    J_beta_zero_limit,
    coth_half,
    eval_J,
    eval_J_beta,
)
from qsrlab.core.exceptions import ModelDomainError
from qsrlab.core.models import Environment, SpectralModel


class TestEvalJ:
    """Piecewise spectral densities."""

    def test_ohmic_linear_branch(self, ohmic_model):
        """Below Lambda, J grows linearly with omega."""
        assert eval_J(ohmic_model, 0.5) == pytest.approx(0.59 * 0.5)
        assert eval_J(ohmic_model, 1.0) == pytest.approx(0.59)

    def test_ohmic_plateau(self, ohmic_model):
        """At and above Lambda, J is eta * Lambda."""
        assert eval_J(ohmic_model, 2.0) == pytest.approx(0.59 * 2.0)
        assert eval_J(ohmic_model, 50.0) == pytest.approx(0.59 * 2.0)

    def test_constant_gap(self, constant_model):
        """J vanishes below mu and equals eta from mu on."""
        assert eval_J(constant_model, 0.3) == 0.0
        assert eval_J(constant_model, 0.5) == 3.5
        assert eval_J(constant_model, 10.0) == 3.5

    @pytest.mark.parametrize("omega", [0.0, -1.0])
    def test_non_positive_frequency_rejected(self, ohmic_model, omega):
        """omega <= 0 is outside the domain of J."""
        with pytest.raises(ModelDomainError):
            eval_J(ohmic_model, omega)
        with pytest.raises(ModelDomainError):
            eval_J_beta(ohmic_model, Environment(0.3), omega)

    def test_invalid_model_parameters(self):
        """Non-positive eta or cutoff is rejected at construction."""
        with pytest.raises(ModelDomainError):
            SpectralModel.ohmic(0.0, 2.0)
        with pytest.raises(ModelDomainError):
            SpectralModel.constant_gap(1.0, -0.5)


class TestThermalSpectralDensity:
    """J^beta = J * coth(beta*omega/2)."""

    def test_zero_temperature_equals_J(self, ohmic_model, constant_model):
        """At T = 0 the thermal factor is one."""
        vacuum = Environment(0.0)
        for model in (ohmic_model, constant_model):
            for omega in (0.2, 0.7, 1.0, 3.0):
                assert eval_J_beta(model, vacuum, omega) == eval_J(model, omega)

    def test_never_below_J(self, ohmic_model, constant_model):
        """coth >= 1, so J^beta >= J everywhere."""
        for temperature in (0.01, 0.3, 2.0, 50.0):
            env = Environment(temperature)
            for model in (ohmic_model, constant_model):
                for omega in (1e-6, 0.1, 0.5, 1.0, 2.0, 100.0):
                    assert eval_J_beta(model, env, omega) >= eval_J(model, omega)

    def test_matches_mpmath(self, ohmic_model):
        """Thermal factor agrees with an arbitrary-precision coth."""
        env = Environment(0.3)
        for omega in (0.05, 0.8, 1.7):
            expected = 0.59 * omega * float(mpmath.coth(mpmath.mpf(omega) / 0.6))
            assert eval_J_beta(ohmic_model, env, omega) == pytest.approx(expected, rel=1e-13)

    def test_ohmic_low_frequency_limit(self, ohmic_model):
        """J^beta(omega) -> 2*T*eta as omega -> 0."""
        env = Environment(0.4)
        limit = J_beta_zero_limit(ohmic_model, env)
        assert limit == pytest.approx(2.0 * 0.4 * 0.59)
        assert eval_J_beta(ohmic_model, env, 1e-9) == pytest.approx(limit, rel=1e-9)

    def test_constant_low_frequency_limit(self, constant_model):
        """The gapped model has no weight at low frequency."""
        env = Environment(5.0)
        assert J_beta_zero_limit(constant_model, env) == 0.0
        assert eval_J_beta(constant_model, env, 1e-3) == 0.0


class TestCothHalf:
    """coth(beta*omega/2) with its small-argument series."""

    def test_zero_temperature(self):
        """beta = inf gives exactly one."""
        assert coth_half(math.inf, 0.5) == 1.0

    @pytest.mark.parametrize("x", [1e-6, 0.5 * COTH_SERIES_THRESHOLD,
                                   0.999 * COTH_SERIES_THRESHOLD,
                                   1.001 * COTH_SERIES_THRESHOLD, 0.3])
    def test_continuous_across_series_threshold(self, x):
        """Series and closed form agree with mpmath on both sides of the switch."""
        expected = float(mpmath.coth(mpmath.mpf(x)))
        assert coth_half(2.0, x) == pytest.approx(expected, rel=1e-13)
