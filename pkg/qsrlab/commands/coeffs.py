"""Coeffs subcommand: kinetic coefficients at a single temperature."""

import argparse
import logging

from ..analysis.dispersion import kinetic_coefficients
from ..core.models import Environment
from ..utils.artifacts import emit, render_json
from ..utils.formatter import format_coefficients
from .common import EXIT_OK, add_config_arguments, load_run_config, run_guarded

logger = logging.getLogger(__name__)

FORMATS = ('json', 'text')


def add_coeffs_parser(subparsers) -> argparse.ArgumentParser:
    """Add 'coeffs' subcommand parser."""
    parser = subparsers.add_parser(
        'coeffs',
        help='Compute gamma, gamma_beta, sigma_beta and omega_R_beta',
        description=(
            'Compute the kinetic coefficients of the configured spin system and\n'
            'spectral model at one bath temperature (environment.T or --temperature).'
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_config_arguments(parser, temperature=True, formats=FORMATS)
    return parser


def run_coeffs(args) -> int:
    """
    Run coeffs subcommand.

    Returns:
        Exit code (0 success, 2 configuration error, 3 numerical failure)
    """
    def action() -> int:
        config = load_run_config(args)
        env = Environment(config.temperature)
        coeffs = kinetic_coefficients(config.system, config.model, env,
                                      config.tol, config.panel_limit)
        if config.output_format == 'text':
            emit(format_coefficients(coeffs, env.temperature), config.output_directory,
                 'coeffs.txt')
        else:
            emit(render_json(coeffs.to_dict()), config.output_directory, 'coeffs.json')
        return EXIT_OK

    return run_guarded('Coeffs', action)
