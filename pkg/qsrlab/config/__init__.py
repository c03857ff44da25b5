"""Run-config loading, validation and figure presets."""

from .loader import RunConfig, OdeSettings, build_run_config, parse_run_config, load_config_file
from .presets import PRESETS, get_preset, preset_names

__all__ = [
    'RunConfig',
    'OdeSettings',
    'build_run_config',
    'parse_run_config',
    'load_config_file',
    'PRESETS',
    'get_preset',
    'preset_names',
]
