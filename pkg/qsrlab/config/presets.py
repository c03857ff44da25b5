#!/usr/bin/env python3
"""
Figure presets.

Each preset is a complete run-config dictionary for the temperature and
noise-strength sweeps of the driven spin-boson model: Omega = 0.10,
Delta = 0.35, Lambda = 2.0 for the Ohmic family and mu = 0.50 for the
constant-gap family.
"""

import copy
from typing import Any, Dict, List

SCHEMA_VERSION = 1

DRIVE_FREQUENCY = 0.10
DELTA_RATIO = 0.35
OHMIC_CUTOFF = 2.0
CONSTANT_GAP = 0.50
DEFAULT_XI = 1e-3

DEFAULT_T_AXIS = {'start': 0.01, 'stop': 2.0, 'num': 200, 'spacing': 'log'}
OHMIC_ETA_AXIS = {'start': 0.3, 'stop': 1.0, 'num': 100, 'spacing': 'linear'}
CONSTANT_ETA_AXIS = {'start': 1.0, 'stop': 20.0, 'num': 100, 'spacing': 'linear'}


def _ohmic(eta: float) -> Dict[str, Any]:
    return {'type': 'ohmic', 'eta': eta, 'lambda': OHMIC_CUTOFF}


def _constant(eta: float) -> Dict[str, Any]:
    return {'type': 'constant', 'eta': eta, 'mu': CONSTANT_GAP}


def _preset(spectral: Dict[str, Any], eta_axis: Dict[str, Any]) -> Dict[str, Any]:
    return {
        'schema_version': SCHEMA_VERSION,
        'system': {'delta_ratio': DELTA_RATIO},
        'spectral': spectral,
        'environment': {'T_axis': DEFAULT_T_AXIS},
        'drive': {'xi': DEFAULT_XI, 'Omega': DRIVE_FREQUENCY},
        'scan': {'eta_axis': eta_axis},
    }


# fig5*: SNR over the (eta, T) plane; fig6*: R(T) at fixed eta
PRESETS: Dict[str, Dict[str, Any]] = {
    'fig5a': _preset(_ohmic(0.59), OHMIC_ETA_AXIS),
    'fig5b': _preset(_constant(3.5), CONSTANT_ETA_AXIS),
    'fig6a': _preset(_ohmic(0.59), OHMIC_ETA_AXIS),
    'fig6a1': _preset(_ohmic(0.65), OHMIC_ETA_AXIS),
    'fig6a2': _preset(_ohmic(0.70), OHMIC_ETA_AXIS),
    'fig6b': _preset(_constant(3.5), CONSTANT_ETA_AXIS),
    'fig6b1': _preset(_constant(4.5), CONSTANT_ETA_AXIS),
    'fig6b2': _preset(_constant(15.0), CONSTANT_ETA_AXIS),
}


def preset_names() -> List[str]:
    """Names accepted by --preset."""
    return sorted(PRESETS)


def get_preset(name: str) -> Dict[str, Any]:
    """
    Return a fresh copy of a preset run-config.

    Raises:
        KeyError: If the preset does not exist
    """
    if name not in PRESETS:
        raise KeyError(f"unknown preset '{name}' (choose from {', '.join(preset_names())})")
    return copy.deepcopy(PRESETS[name])
