"""Tests for the core data models."""

import math

import numpy as np
import pytest

from qsrlab.core.exceptions import ArgumentError, ModelDomainError
from qsrlab.core.models import (
    BlochState,
    Drive,
    Environment,
    SpectralModel,
    SpinSystem,
    Trajectory,
)


class TestSpinSystem:
    """Normalization and construction helpers."""

    def test_from_ratio(self):
        """epsilon = sqrt(1 - Delta^2)."""
        system = SpinSystem.from_ratio(0.35)
        assert system.epsilon == pytest.approx(math.sqrt(1 - 0.35 ** 2))
        assert system.mixing_angle == pytest.approx(math.atan2(0.35, system.epsilon))

    def test_strict_normalization(self):
        """Strict construction refuses unnormalized pairs."""
        with pytest.raises(ModelDomainError):
            SpinSystem.create(1.0, 1.0)
        system = SpinSystem.create(1.0, 1.0, strict=False)
        assert system.epsilon == pytest.approx(math.sqrt(0.5))

    def test_invalid_values(self):
        """Negative delta or a zero vector are rejected."""
        with pytest.raises(ModelDomainError):
            SpinSystem(0.6, -0.8)
        with pytest.raises(ModelDomainError):
            SpinSystem.create(0.0, 0.0, strict=False)
        with pytest.raises(ModelDomainError):
            SpinSystem.from_ratio(1.5)


class TestEnvironment:
    """Temperature and inverse temperature."""

    def test_vacuum(self):
        """T = 0 has infinite beta and full polarization."""
        env = Environment(0.0)
        assert math.isinf(env.beta)
        assert env.thermal_polarization == 1.0
        assert Environment.from_beta(math.inf) == env

    def test_from_beta(self):
        """beta = 1/T."""
        env = Environment.from_beta(4.0)
        assert env.temperature == 0.25
        assert env.thermal_polarization == pytest.approx(math.tanh(2.0))

    def test_negative_temperature(self):
        """T must be non-negative and finite."""
        with pytest.raises(ModelDomainError):
            Environment(-0.1)
        with pytest.raises(ModelDomainError):
            Environment(math.nan)


class TestDrive:
    """Drive parameters."""

    def test_perturbative_flag(self):
        """xi above 0.05 leaves the perturbative regime."""
        assert Drive(1e-3, 0.1).is_perturbative
        assert not Drive(0.2, 0.1).is_perturbative
        assert Drive(0.0, 0.1).period == pytest.approx(20 * math.pi)

    def test_invalid_drive(self):
        """Omega must be positive and xi non-negative."""
        with pytest.raises(ModelDomainError):
            Drive(1e-3, 0.0)
        with pytest.raises(ModelDomainError):
            Drive(-1e-3, 0.1)


class TestBlochState:
    """Physical constraints on states."""

    def test_populations(self):
        """Diagonal elements are (1 +/- d0)/2."""
        state = BlochState(0.1j, -0.5)
        assert state.populations == (0.25, 0.75)
        assert state.d_minus == -0.1j

    @pytest.mark.parametrize("d_plus, d0", [(0j, 1.1), (0.5 + 0j, 0.5)])
    def test_outside_bloch_ball(self, d_plus, d0):
        """States outside the Bloch ball are rejected."""
        with pytest.raises(ModelDomainError):
            BlochState(d_plus, d0)


class TestTrajectory:
    """Sampled trajectories."""

    def test_read_only_arrays(self):
        """Arrays cannot be modified after construction."""
        times = np.array([0.0, 0.1])
        trajectory = Trajectory(times, np.zeros(2, dtype=complex), np.array([-1.0, -1.0]),
                                np.zeros(2))
        with pytest.raises(ValueError):
            trajectory.times[0] = 1.0
        assert trajectory.final_state.d0 == -1.0

    def test_length_mismatch(self):
        """All arrays share one length."""
        with pytest.raises(ArgumentError):
            Trajectory(np.array([0.0, 0.1]), np.zeros(1, dtype=complex), np.zeros(2), np.zeros(2))


def test_spectral_model_round_trip_to_config():
    """to_dict produces the run-config spectral block."""
    assert SpectralModel.ohmic(0.59, 2.0).to_dict() == {'type': 'ohmic', 'eta': 0.59, 'lambda': 2.0}
    assert SpectralModel.constant_gap(3.5, 0.5).plateau == 3.5
