"""Snr-curve subcommand: R(T) at fixed noise strength."""

import argparse
import logging

import numpy as np

from ..analysis.scan import MIN_CURVE_SAMPLES, classify_curve, evaluate_curve
from ..core.exceptions import ConfigError
from ..utils.artifacts import emit, render_csv, render_json
from ..utils.formatter import format_classification
from .common import EXIT_OK, add_config_arguments, load_run_config, resolve_threads, run_guarded

logger = logging.getLogger(__name__)

FORMATS = ('csv', 'json')
CSV_HEADER = ('T', 'snr', 'amplitude', 'phase', 'omega_R')


def add_snr_curve_parser(subparsers) -> argparse.ArgumentParser:
    """Add 'snr-curve' subcommand parser."""
    parser = subparsers.add_parser(
        'snr-curve',
        help='Evaluate SNR, amplitude and phase along a temperature axis',
        description=(
            'Evaluate R(T), A(T), phi(T) and omega_R(T) for the configured model\n'
            'on environment.T_axis (or scan.T_axis).'
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_config_arguments(parser, formats=FORMATS)
    return parser


def run_snr_curve(args) -> int:
    """
    Run snr-curve subcommand.

    Returns:
        Exit code (0 success, 2 configuration error, 3 numerical failure)
    """
    def action() -> int:
        config = load_run_config(args)
        if config.T_axis is None:
            raise ConfigError("snr-curve needs a temperature axis", field='environment.T_axis')
        cells = evaluate_curve(config.system, config.model, config.T_axis,
                               config.drive.Omega, config.tol, resolve_threads(args),
                               config.panel_limit)

        classification = None
        snr_values = np.array([c.snr for c in cells])
        finite = np.isfinite(snr_values)
        if np.count_nonzero(finite) >= MIN_CURVE_SAMPLES:
            report = classify_curve(
                np.asarray(config.T_axis)[finite], snr_values[finite],
                np.array([c.omega_R for c in cells])[finite], eta=config.model.eta)
            classification = report.to_dict()
            logger.info("Classification: %s", format_classification(classification))
        if not np.all(finite):
            logger.warning("%d temperatures failed and are recorded as nan",
                           int(np.count_nonzero(~finite)))

        if config.output_format == 'json':
            emit(render_json({
                'model': config.model.to_dict(),
                'Omega': config.drive.Omega,
                'points': [{'T': c.temperature, 'snr': c.snr, 'amplitude': c.amplitude,
                            'phase': c.phase, 'omega_R': c.omega_R} for c in cells],
                'classification': classification,
            }), config.output_directory, 'snr_curve.json')
        else:
            rows = ((c.temperature, c.snr, c.amplitude, c.phase, c.omega_R) for c in cells)
            emit(render_csv(CSV_HEADER, rows), config.output_directory, 'snr_curve.csv')
        return EXIT_OK

    return run_guarded('Snr-curve', action)
