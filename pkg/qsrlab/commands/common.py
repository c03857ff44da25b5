"""Arguments and error handling shared by the subcommands."""

import argparse
import logging
import os
from typing import Any, Callable, Dict, Optional

from ..config.loader import RunConfig, build_run_config
from ..config.presets import preset_names
from ..core.exceptions import (
    ArgumentError,
    ConfigError,
    ModelDomainError,
    NumericalError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

THREADS_ENV_VAR = 'QSR_LAB_THREADS'


def add_config_arguments(parser: argparse.ArgumentParser, temperature: bool = False,
                         formats: Optional[tuple] = None) -> None:
    """Add --config/--preset/--out/--tol/--threads (and optional extras)."""
    source = parser.add_argument_group('run-config')
    source.add_argument(
        '--config',
        metavar='PATH',
        help='JSON run-config file (merged on top of --preset)',
    )
    source.add_argument(
        '--preset',
        choices=preset_names(),
        help='Figure preset used as the base configuration',
    )
    parser.add_argument(
        '--out',
        metavar='DIR',
        help='Directory for output artifacts (default: stdout)',
    )
    parser.add_argument(
        '--tol',
        type=float,
        help='Absolute quadrature tolerance on sigma_beta (default: 1e-9)',
    )
    parser.add_argument(
        '--threads',
        type=int,
        help=f'Worker threads (fallback: ${THREADS_ENV_VAR})',
    )
    if temperature:
        parser.add_argument(
            '--temperature',
            type=float,
            metavar='T',
            help='Bath temperature in units of omega_0/k_B (overrides environment.T)',
        )
    if formats:
        parser.add_argument(
            '--format',
            choices=formats,
            help=f'Output format (default: {formats[0]})',
        )


def _overrides(args) -> Dict[str, Any]:
    overrides: Dict[str, Any] = {}
    if getattr(args, 'tol', None) is not None:
        overrides['quadrature'] = {'tol': args.tol}
    if getattr(args, 'temperature', None) is not None:
        overrides['environment'] = {'T': args.temperature}
    output: Dict[str, Any] = {}
    if getattr(args, 'out', None) is not None:
        output['directory'] = args.out
    if getattr(args, 'format', None) is not None:
        output['format'] = args.format
    if output:
        overrides['output'] = output
    return overrides


def load_run_config(args) -> RunConfig:
    """
    Build the validated run-config from --preset, --config and flag overrides.

    Raises:
        ConfigError: If the configuration is missing or invalid
    """
    return build_run_config(
        preset=getattr(args, 'preset', None),
        config_path=getattr(args, 'config', None),
        overrides=_overrides(args),
    )


def resolve_threads(args) -> Optional[int]:
    """
    Thread count from --threads, then $QSR_LAB_THREADS; None lets the pool decide.

    Raises:
        ConfigError: If the value is not a positive integer
    """
    value = getattr(args, 'threads', None)
    source = '--threads'
    if value is None:
        raw = os.environ.get(THREADS_ENV_VAR)
        if not raw:
            return None
        source = THREADS_ENV_VAR
        try:
            value = int(raw)
        except ValueError as e:
            raise ConfigError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}") from e
    if value < 1:
        raise ConfigError(f"{source} must be >= 1, got {value}")
    return value


def run_guarded(name: str, action: Callable[[], int]) -> int:
    """
    Run a subcommand body and map exceptions to exit codes.

    Returns:
        0 on success, 2 for configuration and argument errors, 3 for
        numerical failures, 1 for anything unexpected
    """
    try:
        return action()
    except ConfigError as e:
        logger.error("Configuration error: %s", e)
        return EXIT_CONFIG
    except (ModelDomainError, ArgumentError) as e:
        logger.error("Invalid input: %s", e)
        return EXIT_CONFIG
    except NumericalError as e:
        logger.error("Numerical failure: %s", e)
        return EXIT_NUMERICAL
    except Exception as e:  # pylint: disable=broad-exception-caught
        logger.error("%s command failed: %s", name, e)
        return EXIT_FAILURE
