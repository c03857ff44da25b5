"""Tests for closed-form relaxation and RK4 integration of the Bloch equations."""

import math

import numpy as np
import pytest

from qsrlab.analysis.dispersion import kinetic_coefficients
from qsrlab.analysis.dynamics import (
    D0Relaxation,
    closed_form_deviation,
    compare_driven_response,
    equilibrium_populations,
    integrate_driven,
    max_step,
    relax_closed_form,
    simulate_to_steady_state,
    thermal_populations,
    thermal_state,
    trajectory_rows,
)
from qsrlab.config.loader import build_run_config
from qsrlab.core.exceptions import ArgumentError, StabilityError
from qsrlab.core.models import BlochState, Drive, Environment, KineticCoefficients, SpinSystem

from tests.conftest import make_coefficients

OMEGA = 0.10


class TestClosedFormRelaxation:
    """Exact undriven evolution."""

    def test_identity_at_zero_time(self):
        """tau = 0 returns the initial state."""
        state = BlochState(0.1 - 0.2j, 0.4)
        final = relax_closed_form(state, make_coefficients(), Environment(0.5), 0.0)
        assert final == state

    def test_negative_time_rejected(self):
        """tau must be non-negative."""
        with pytest.raises(ArgumentError):
            relax_closed_form(thermal_state(Environment(0.5)), make_coefficients(),
                              Environment(0.5), -1.0)

    def test_vacuum_decay(self):
        """At T = 0, D0 relaxes as (D0 + 1) exp(-2 gamma tau) - 1."""
        coeffs = make_coefficients(gamma_beta=0.2, polarization=1.0)
        final = relax_closed_form(BlochState(0j, 0.5), coeffs, Environment(0.0), 3.0)
        assert final.d0 == pytest.approx(1.5 * math.exp(-1.2) - 1.0)

    def test_pure_rotation_without_damping(self):
        """gamma_beta = 0 only rotates <D+>."""
        coeffs = KineticCoefficients(gamma=0.0, gamma_beta=0.0, sigma_beta=0.5, omega_R_beta=0.5)
        final = relax_closed_form(BlochState(0.2 + 0j, 0.1), coeffs, Environment(0.0), math.pi)
        assert final.d_plus == pytest.approx(0.2j)
        assert final.d0 == 0.1

    @pytest.mark.parametrize("beta", [0.5, 2.0, 10.0])
    def test_thermal_equilibrium(self, preset_system, ohmic_model, beta):
        """Random physical states reach the thermal populations by 20/gamma_beta."""
        rng = np.random.default_rng(7)
        env = Environment.from_beta(beta)
        coeffs = kinetic_coefficients(preset_system, ohmic_model, env)
        lower, upper = equilibrium_populations(env)
        assert lower == pytest.approx(math.exp(-beta / 2) / (2 * math.cosh(beta / 2)))
        assert upper == pytest.approx(math.exp(beta / 2) / (2 * math.cosh(beta / 2)))
        for _ in range(10):
            d0 = rng.uniform(-1.0, 1.0)
            radius = 0.5 * math.sqrt(1.0 - d0 ** 2) * rng.uniform()
            state = BlochState(radius * np.exp(1j * rng.uniform(0, 2 * math.pi)), d0)
            final = relax_closed_form(state, coeffs, env, 20.0 / coeffs.gamma_beta)
            populations = thermal_populations(final)
            assert abs(final.d_plus) < 1e-6
            assert populations[0] == pytest.approx(lower, abs=1e-6)
            assert populations[1] == pytest.approx(upper, abs=1e-6)

    @pytest.mark.parametrize("temperature", [0.0, 0.3, 1.0])
    def test_contracts_toward_thermal_state(self, preset_system, constant_model, temperature):
        """The distance to the thermal fixed point never grows without drive."""
        rng = np.random.default_rng(11)
        env = Environment(temperature)
        coeffs = kinetic_coefficients(preset_system, constant_model, env)
        target = thermal_state(env)
        for _ in range(5):
            d0 = rng.uniform(-1.0, 1.0)
            radius = 0.5 * math.sqrt(1.0 - d0 ** 2) * rng.uniform()
            state = BlochState(radius * np.exp(1j * rng.uniform(0, 2 * math.pi)), d0)
            trajectory = integrate_driven(state, coeffs, preset_system, env, Drive(0.0, OMEGA),
                                          tau_end=20.0, dt=0.01)
            integrated = np.hypot(np.abs(trajectory.d_plus), trajectory.d0 - target.d0)
            exact = []
            for tau in trajectory.times[::100]:
                final = relax_closed_form(state, coeffs, env, float(tau))
                exact.append(math.hypot(abs(final.d_plus), final.d0 - target.d0))
            assert np.all(np.diff(integrated) <= 1e-14)
            assert np.all(np.diff(exact) <= 1e-14)
            assert integrated[-1] < integrated[0]


class TestIntegrateDriven:
    """Fixed-step RK4 of the driven equations."""

    def test_step_bound(self):
        """dt may not exceed 0.05/max(1, Omega)."""
        assert max_step(0.1) == 0.05
        assert max_step(2.0) == 0.025
        with pytest.raises(ArgumentError):
            integrate_driven(BlochState(0j, -1.0), make_coefficients(), *_system_env(),
                             Drive(0.0, OMEGA), tau_end=1.0, dt=0.06)

    def test_horizon_must_be_positive(self):
        """tau_end <= 0 is rejected."""
        with pytest.raises(ArgumentError):
            integrate_driven(BlochState(0j, -1.0), make_coefficients(), *_system_env(),
                             Drive(0.0, OMEGA), tau_end=0.0)

    @pytest.mark.parametrize("relaxation", list(D0Relaxation))
    def test_thermal_state_is_fixed_point(self, relaxation):
        """Without drive the thermal state does not move."""
        system, env = _system_env()
        coeffs = make_coefficients(gamma_beta=0.1, polarization=env.thermal_polarization)
        trajectory = integrate_driven(thermal_state(env), coeffs, system, env,
                                      Drive(0.0, OMEGA), tau_end=20.0, dt=0.05,
                                      d0_relaxation=relaxation)
        assert np.max(np.abs(trajectory.d_plus)) == 0.0
        assert np.max(np.abs(trajectory.d0 + env.thermal_polarization)) < 1e-12

    def test_undriven_matches_closed_form(self, preset_system, ohmic_model):
        """xi = 0 reproduces the exact relaxation."""
        env = Environment(0.3)
        coeffs = kinetic_coefficients(preset_system, ohmic_model, env)
        trajectory = integrate_driven(BlochState(0.2 + 0.1j, 0.3), coeffs, preset_system, env,
                                      Drive(0.0, OMEGA), tau_end=5.0, dt=1e-3)
        assert closed_form_deviation(trajectory, coeffs, env) <= 1e-8

    def test_fourth_order_convergence(self):
        """Halving dt reduces the error about sixteen-fold."""
        system, env = _system_env()
        coeffs = make_coefficients(omega_R=1.0, gamma_beta=0.1, polarization=0.5)
        drive = Drive(0.05, OMEGA)
        finals = []
        for dt in (0.03125, 0.015625, 0.0078125):
            trajectory = integrate_driven(BlochState(0.2 + 0.1j, 0.3), coeffs, system, env,
                                          drive, tau_end=8.0, dt=dt)
            finals.append(trajectory.d_plus[-1])
        ratio = abs(finals[0] - finals[1]) / abs(finals[1] - finals[2])
        assert 4.0 <= ratio <= 64.0

    def test_records_every_step(self):
        """The horizon is split into ceil(tau_end/dt) equal steps."""
        system, env = _system_env()
        trajectory = integrate_driven(thermal_state(env), make_coefficients(), system, env,
                                      Drive(1e-3, OMEGA), tau_end=1.0, dt=0.03)
        assert len(trajectory) == 35
        assert trajectory.times[0] == 0.0
        assert trajectory.times[-1] == 1.0
        rows = list(trajectory_rows(trajectory))
        assert len(rows) == 35
        assert len(rows[0]) == 5

    def test_unstable_run_reports_stability_error(self):
        """A growing population is stopped once it leaves [-1, 1]."""
        system, env = _system_env()
        coeffs = KineticCoefficients(gamma=0.0, gamma_beta=-1.0, sigma_beta=0.0,
                                     omega_R_beta=1.0)
        with pytest.raises(StabilityError):
            integrate_driven(BlochState(0j, 0.5), coeffs, system, env,
                             Drive(0.0, OMEGA), tau_end=5.0, dt=0.01)


class TestDrivenResponse:
    """Harmonic fit of the stationary ODE solution against the closed forms."""

    def test_matches_closed_form(self, preset_system):
        """Amplitude within 1% and phase within 0.02 rad."""
        env = Environment(0.3)
        coeffs = make_coefficients(omega_R=0.6, gamma_beta=0.2,
                                   polarization=env.thermal_polarization)
        drive = Drive(1e-3, OMEGA)
        trajectory = simulate_to_steady_state(coeffs, preset_system, env, drive)
        comparison = compare_driven_response(trajectory, coeffs, preset_system, env, drive)
        assert comparison.amplitude_rel_error <= 1e-2
        assert comparison.phase_error <= 0.02
        # the integrated waveform lags by phi + pi
        assert comparison.fit.signed_amplitude < 0

    def test_amplitude_is_linear_in_drive(self, preset_system):
        """Halving xi halves the extracted amplitude to within 0.2%."""
        env = Environment(0.3)
        coeffs = make_coefficients(omega_R=0.6, gamma_beta=0.2,
                                   polarization=env.thermal_polarization)
        per_unit_drive = []
        for xi in (1e-3, 5e-4):
            drive = Drive(xi, OMEGA)
            trajectory = simulate_to_steady_state(coeffs, preset_system, env, drive)
            comparison = compare_driven_response(trajectory, coeffs, preset_system, env, drive)
            per_unit_drive.append(comparison.fitted_amplitude)
        assert per_unit_drive[1] == pytest.approx(per_unit_drive[0], rel=2e-3)

    @pytest.mark.parametrize("temperature", [0.1, 0.3, 1.0])
    @pytest.mark.parametrize("preset", ['fig6a', 'fig6a1', 'fig6a2', 'fig6b', 'fig6b1', 'fig6b2'])
    def test_presets_match_closed_form(self, preset, temperature):
        """Every fixed-eta preset reproduces |A| within 1% and phi within 0.02 rad."""
        config = build_run_config(preset=preset)
        env = Environment(temperature)
        coeffs = kinetic_coefficients(config.system, config.model, env)
        trajectory = simulate_to_steady_state(coeffs, config.system, env, config.drive)
        comparison = compare_driven_response(trajectory, coeffs, config.system, env,
                                             config.drive)
        assert config.drive.xi == 1e-3
        assert comparison.amplitude_rel_error <= 1e-2
        assert comparison.phase_error <= 0.02

    def test_undriven_comparison_rejected(self, preset_system):
        """A comparison needs a drive."""
        env = Environment(0.3)
        coeffs = make_coefficients(gamma_beta=0.5, polarization=env.thermal_polarization)
        drive = Drive(0.0, OMEGA)
        trajectory = integrate_driven(thermal_state(env), coeffs, preset_system, env, drive,
                                      tau_end=10.0, dt=0.05)
        with pytest.raises(ArgumentError):
            compare_driven_response(trajectory, coeffs, preset_system, env, drive)


def _system_env():
    return SpinSystem.from_ratio(0.35), Environment(0.5)
