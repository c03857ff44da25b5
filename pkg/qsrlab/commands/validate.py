"""Validate subcommand: run the built-in oracle suite."""

import argparse
import logging

from jinja2 import TemplateError as Jinja2TemplateError

from ..core.exceptions import ConfigError
from ..utils.artifacts import emit, render_json
from ..utils.rendering import render_validation_report
from ..validation.suite import run_validation_suite
from .common import (
    EXIT_CONFIG,
    EXIT_NUMERICAL,
    EXIT_OK,
    add_config_arguments,
    load_run_config,
    run_guarded,
)

logger = logging.getLogger(__name__)

FORMATS = ('text', 'json')

DEFAULT_TOL = 1e-9
DEFAULT_SEED = 12345
DEFAULT_SAMPLES = 20


def add_validate_parser(subparsers) -> argparse.ArgumentParser:
    """Add 'validate' subcommand parser."""
    parser = subparsers.add_parser(
        'validate',
        help='Run the built-in oracle suite',
        description=(
            'Compare the production quadrature, response and ODE code paths with\n'
            'independent references: closed-form zero-temperature shifts, the\n'
            'symmetric-exclusion principal value, the subtracted dispersion\n'
            'relation, algebraic identities and the driven/undriven ODE.\n\n'
            'A run-config is optional; its quadrature and validation blocks\n'
            'set the tolerance, seed and sample count.'
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_config_arguments(parser, formats=FORMATS)
    parser.add_argument(
        '--skip-dynamics',
        action='store_true',
        help='Skip the ODE checks',
    )
    parser.add_argument(
        '--template',
        metavar='PATH',
        help='Path to custom Jinja2 template for the text report',
    )
    return parser


def run_validate(args) -> int:
    """
    Run validate subcommand.

    Returns:
        Exit code (0 all checks passed, 2 configuration error, 3 failed checks)
    """
    def action() -> int:
        if args.config is not None or args.preset is not None:
            config = load_run_config(args)
            tol, seed, samples, panel_limit = (config.tol, config.seed, config.samples,
                                               config.panel_limit)
            directory, output_format = config.output_directory, config.output_format
        else:
            tol = args.tol if args.tol is not None else DEFAULT_TOL
            seed, samples, panel_limit = DEFAULT_SEED, DEFAULT_SAMPLES, 200
            directory, output_format = args.out, args.format
            if not tol > 0:
                raise ConfigError("tol must be positive", field="--tol")

        report = run_validation_suite(tol, seed=seed, samples=samples,
                                      panel_limit=panel_limit,
                                      include_dynamics=not args.skip_dynamics)
        if output_format == 'json':
            emit(render_json(report.to_dict()), directory, 'validation.json')
        else:
            try:
                text = render_validation_report(report.to_dict(), args.template)
            except (FileNotFoundError, Jinja2TemplateError) as e:
                logger.error("Template error: %s", e)
                return EXIT_CONFIG
            emit(text, directory, 'validation.txt')

        if not report.passed:
            logger.error("%d validation checks failed", len(report.failures))
            return EXIT_NUMERICAL
        return EXIT_OK

    return run_guarded('Validate', action)
