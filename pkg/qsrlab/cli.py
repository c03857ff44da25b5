#!/usr/bin/env python3
"""
Main CLI entry point for qsr-lab.

Provides a unified command-line interface with subcommands for the kinetic
coefficients, SNR curves and scans, ODE simulations and validation.
"""

import sys
import logging
import argparse

from .commands.coeffs import add_coeffs_parser, run_coeffs
from .commands.snr_curve import add_snr_curve_parser, run_snr_curve
from .commands.scan import add_scan_parser, run_scan
from .commands.simulate import add_simulate_parser, run_simulate
from .commands.validate import add_validate_parser, run_validate

LOG_LEVELS = {
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "DEBUG": logging.DEBUG,
}

COMMANDS = {
    'coeffs': run_coeffs,
    'snr-curve': run_snr_curve,
    'scan': run_scan,
    'simulate': run_simulate,
    'validate': run_validate,
}


def create_parser() -> argparse.ArgumentParser:
    """
    Create the main argument parser with subcommands.

    Returns:
        Configured ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog='qsrlab',
        description='Quantum stochastic resonance of a biased two-level system',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
subcommands:
  coeffs     Kinetic coefficients gamma, gamma_beta, sigma_beta, omega_R at one T
  snr-curve  SNR, amplitude, phase and omega_R along a temperature axis
  scan       SNR over an (eta, T) grid with resonance classification per eta
  simulate   Driven RK4 trajectory compared with the closed-form response
  validate   Built-in oracle suite

examples:
  # Coefficients of the Ohmic eta=0.59 preset at T=0.3
  qsrlab coeffs --preset fig6a --temperature 0.3

  # SNR curve of the anti-resonance preset as CSV
  qsrlab snr-curve --preset fig6a1 > fig6a1.csv

  # Full (eta, T) scan written to a directory
  qsrlab scan --preset fig5a --out results/ --threads 4

  # Driven trajectory from a custom run-config on top of a preset
  qsrlab simulate --preset fig6b --config drive.json --temperature 0.3

  # Validation suite as JSON
  qsrlab validate --format json

For more help on a subcommand:
  qsrlab coeffs --help
  qsrlab scan --help
        """
    )

    # Global verbose option (applies to all subcommands)
    parser.add_argument(
        '-v', '--verbose',
        choices=LOG_LEVELS.keys(),
        default=list(LOG_LEVELS.keys())[0],
        help=f'Set logging verbosity level (default: {list(LOG_LEVELS.keys())[0]})'
    )

    subparsers = parser.add_subparsers(
        title='subcommands',
        description='Available commands',
        dest='subcommand',
        required=True
    )

    add_coeffs_parser(subparsers)
    add_snr_curve_parser(subparsers)
    add_scan_parser(subparsers)
    add_simulate_parser(subparsers)
    add_validate_parser(subparsers)

    return parser


def main(argv=None) -> int:
    """
    Main entry point for the CLI.

    Returns:
        Exit code (0 success, 1 unexpected failure, 2 configuration error,
        3 numerical failure)
    """
    parser = create_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=LOG_LEVELS[args.verbose],
        format='%(levelname)s: %(message)s',
        stream=sys.stderr
    )

    command = COMMANDS.get(args.subcommand)
    if command is None:
        parser.print_help()
        return 1
    return command(args)


if __name__ == '__main__':
    sys.exit(main())
