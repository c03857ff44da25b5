"""Simulate subcommand: driven ODE trajectory compared with the closed forms."""

import argparse
import json
import logging
from typing import Any, Dict

from ..analysis.dispersion import kinetic_coefficients
from ..analysis.dynamics import (
    D0Relaxation,
    closed_form_deviation,
    compare_driven_response,
    integrate_driven,
    steady_state_start,
    thermal_state,
    trajectory_rows,
)
from ..core.exceptions import ArgumentError, ConditioningError
from ..core.models import PERTURBATIVE_XI_LIMIT, Environment
from ..utils.artifacts import emit, render_csv
from .common import EXIT_OK, add_config_arguments, load_run_config, run_guarded

logger = logging.getLogger(__name__)

CSV_HEADER = ('tau', 're_dplus', 'im_dplus', 'd0', 'x')


def add_simulate_parser(subparsers) -> argparse.ArgumentParser:
    """Add 'simulate' subcommand parser."""
    parser = subparsers.add_parser(
        'simulate',
        help='Integrate the driven equations and compare with the response formulas',
        description=(
            'Integrate the driven Bloch equations with fixed-step RK4 and write the\n'
            'trajectory as CSV. A JSON footer line (prefixed with #) compares the\n'
            'harmonic fit of X(tau) with the closed-form amplitude and phase, or\n'
            'for xi = 0 reports the deviation from the closed-form relaxation.'
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_config_arguments(parser, temperature=True)
    return parser


def run_simulate(args) -> int:
    """
    Run simulate subcommand.

    Returns:
        Exit code (0 success, 2 configuration error, 3 numerical failure)
    """
    def action() -> int:  # pylint: disable=too-many-locals
        config = load_run_config(args)
        env = Environment(config.temperature)
        drive = config.drive
        ode = config.ode
        if not drive.is_perturbative:
            logger.warning("xi=%g exceeds %g: the O(xi) response formulas are outside "
                           "their perturbative regime", drive.xi, PERTURBATIVE_XI_LIMIT)

        coeffs = kinetic_coefficients(config.system, config.model, env,
                                      config.tol, config.panel_limit)
        if coeffs.gamma_beta == 0:
            raise ArgumentError("gamma_beta vanishes; there is no steady state to simulate")
        tau_end = ode.tau_end
        if tau_end is None:
            tau_end = steady_state_start(coeffs) + ode.n_periods * drive.period
        state0 = ode.initial_state or thermal_state(env)
        relaxation = D0Relaxation(ode.d0_relaxation)
        trajectory = integrate_driven(state0, coeffs, config.system, env, drive,
                                      tau_end, ode.dt, relaxation)

        summary: Dict[str, Any] = {
            'T': env.temperature,
            'xi': drive.xi,
            'Omega': drive.Omega,
            'dt': ode.dt,
            'tau_end': tau_end,
            'd0_relaxation': relaxation.value,
            'perturbative': drive.is_perturbative,
            'coefficients': coeffs.to_dict(),
        }
        if drive.xi == 0:
            summary['max_closed_form_deviation'] = closed_form_deviation(trajectory, coeffs, env)
        else:
            try:
                comparison = compare_driven_response(trajectory, coeffs, config.system,
                                                     env, drive, ode.n_periods)
                summary['comparison'] = {
                    'closed_amplitude': comparison.closed_amplitude,
                    'closed_phase': comparison.closed_phase,
                    'fitted_amplitude': comparison.fitted_amplitude,
                    'fitted_phase': comparison.fit.phase,
                    'fitted_offset': comparison.fit.offset,
                    'residual': comparison.fit.residual,
                    'amplitude_rel_error': comparison.amplitude_rel_error,
                    'phase_error': comparison.phase_error,
                }
                logger.info("Amplitude mismatch %.3e, phase mismatch %.3e rad",
                            comparison.amplitude_rel_error, comparison.phase_error)
            except (ArgumentError, ConditioningError) as e:
                logger.warning("No harmonic comparison: %s (extend ode.tau_end)", e)
                summary['comparison'] = None

        footer = [json.dumps(summary, sort_keys=True)]
        emit(render_csv(CSV_HEADER, trajectory_rows(trajectory), footer),
             config.output_directory, 'trajectory.csv')
        return EXIT_OK

    return run_guarded('Simulate', action)
