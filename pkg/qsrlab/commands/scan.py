"""Scan subcommand: SNR over the (eta, T) plane with per-row classification."""

import argparse
import logging

from ..analysis.scan import scan_rows, scan_snr
from ..core.exceptions import ConfigError
from ..core.models import ScanSpec
from ..utils.artifacts import emit, render_csv, render_json
from ..utils.formatter import format_classification
from .common import EXIT_OK, add_config_arguments, load_run_config, resolve_threads, run_guarded

logger = logging.getLogger(__name__)

CSV_HEADER = ('eta', 'T', 'snr', 'omega_R', 'gamma_beta', 'sigma_beta')


def add_scan_parser(subparsers) -> argparse.ArgumentParser:
    """Add 'scan' subcommand parser."""
    parser = subparsers.add_parser(
        'scan',
        help='Sweep the SNR over the (eta, T) grid and classify each eta row',
        description=(
            'Evaluate the SNR on scan.eta_axis x T_axis for the configured model\n'
            'family. With --out, writes scan.csv and classifications.json;\n'
            'otherwise the CSV goes to stdout and classifications to the log.'
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_config_arguments(parser)
    return parser


def run_scan(args) -> int:
    """
    Run scan subcommand.

    Returns:
        Exit code (0 success, 2 configuration error, 3 numerical failure)
    """
    def action() -> int:
        config = load_run_config(args)
        if config.eta_axis is None:
            raise ConfigError("scan needs an eta axis", field='scan.eta_axis')
        if config.T_axis is None:
            raise ConfigError("scan needs a temperature axis", field='scan.T_axis')
        spec = ScanSpec(
            model_family=config.model.kind,
            cutoff=config.model.cutoff,
            eta_axis=config.eta_axis,
            T_axis=config.T_axis,
            system=config.system,
            Omega=config.drive.Omega,
            tol=config.tol,
            panel_limit=config.panel_limit,
        )
        result = scan_snr(spec, threads=resolve_threads(args))

        reports = [report.to_dict() for report in result.classifications]
        for report in reports:
            logger.info("%s", format_classification(report))
        emit(render_csv(CSV_HEADER, scan_rows(result)), config.output_directory, 'scan.csv')
        if config.output_directory is not None:
            emit(render_json(reports), config.output_directory, 'classifications.json')
        return EXIT_OK

    return run_guarded('Scan', action)
