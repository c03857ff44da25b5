#!/usr/bin/env python3
"""
Run-config loading and validation.

A run-config is a JSON document with a ``schema_version`` and the blocks
system, spectral, environment, drive, scan, ode, quadrature, validation and
output. Unknown keys are rejected at every level and every error names the
offending field by its dotted path.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..core.exceptions import ConfigError, ModelDomainError
from ..core.models import BlochState, Drive, SpectralKind, SpectralModel, SpinSystem
from .presets import SCHEMA_VERSION, get_preset

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ('csv', 'json', 'text')
D0_RELAXATION_CHOICES = ('consistent', 'literal')

_ALLOWED_KEYS = {
    '': {'schema_version', 'system', 'spectral', 'environment', 'drive', 'scan',
         'ode', 'quadrature', 'validation', 'output'},
    'system': {'epsilon', 'delta', 'delta_ratio', 'strict'},
    'spectral': {'type', 'eta', 'lambda', 'mu'},
    'environment': {'T', 'T_axis'},
    'drive': {'xi', 'Omega'},
    'scan': {'eta_axis', 'T_axis'},
    'ode': {'dt', 'tau_end', 'n_periods', 'initial_state', 'd0_relaxation'},
    'quadrature': {'tol', 'panel_limit'},
    'validation': {'seed', 'samples'},
    'output': {'directory', 'format'},
}
_AXIS_KEYS = {'start', 'stop', 'num', 'spacing'}
_STATE_KEYS = {'d_plus_re', 'd_plus_im', 'd0'}


@dataclass(frozen=True)
class OdeSettings:
    """Integration settings of the simulate command."""
    dt: float = 0.01
    tau_end: Optional[float] = None
    n_periods: int = 5
    initial_state: Optional[BlochState] = None
    d0_relaxation: str = 'consistent'


@dataclass(frozen=True)
class RunConfig:  # pylint: disable=too-many-instance-attributes
    """Validated run-config."""
    system: SpinSystem
    model: SpectralModel
    drive: Drive
    temperature: float = 0.0
    T_axis: Optional[Tuple[float, ...]] = None  # pylint: disable=invalid-name
    eta_axis: Optional[Tuple[float, ...]] = None
    ode: OdeSettings = field(default_factory=OdeSettings)
    tol: float = 1e-9
    panel_limit: int = 200
    seed: int = 12345
    samples: int = 20
    output_directory: Optional[str] = None
    output_format: Optional[str] = None


def deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """Recursively merge override into a copy of base; override wins."""
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Read a JSON run-config file.

    Raises:
        ConfigError: If the file cannot be read, is empty, is not valid JSON
            (the error carries the line number) or is not a JSON object
    """
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from e
    if not text.strip():
        raise ConfigError(f"config file {path} is empty")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"invalid JSON in {path}: {e.msg} at column {e.colno}",
                          line=e.lineno) from e
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must contain a JSON object")
    logger.debug("Loaded run-config from %s", path)
    return data


def _join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def _check_keys(block: Dict[str, Any], path: str, allowed) -> None:
    for key in block:
        if key not in allowed:
            raise ConfigError(f"unknown key '{key}'", field=_join(path, key))


def _block(data: Dict[str, Any], name: str) -> Dict[str, Any]:
    block = data.get(name, {})
    if not isinstance(block, dict):
        raise ConfigError("expected an object", field=name)
    _check_keys(block, name, _ALLOWED_KEYS[name])
    return block


def _number(block: Dict[str, Any], key: str, path: str,
            default: Optional[float] = None) -> Optional[float]:
    value = block.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"expected a number, got {value!r}", field=_join(path, key))
    return float(value)


def _integer(block: Dict[str, Any], key: str, path: str, default: int) -> int:
    value = block.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"expected an integer, got {value!r}", field=_join(path, key))
    return value


def _required(value: Optional[float], field_path: str) -> float:
    if value is None:
        raise ConfigError("missing required value", field=field_path)
    return value


def parse_axis(value: Any, path: str) -> Tuple[float, ...]:
    """
    Parse an axis given as an increasing list or as {start, stop, num, spacing}.

    Raises:
        ConfigError: On malformed or non-increasing axes
    """
    if isinstance(value, dict):
        _check_keys(value, path, _AXIS_KEYS)
        start = _required(_number(value, 'start', path), _join(path, 'start'))
        stop = _required(_number(value, 'stop', path), _join(path, 'stop'))
        num = _integer(value, 'num', path, 0)
        spacing = value.get('spacing', 'linear')
        if num < 1:
            raise ConfigError("num must be >= 1", field=_join(path, 'num'))
        if spacing == 'log':
            if not 0 < start:
                raise ConfigError("log spacing needs start > 0", field=_join(path, 'start'))
            points = np.geomspace(start, stop, num)
        elif spacing == 'linear':
            points = np.linspace(start, stop, num)
        else:
            raise ConfigError(f"spacing must be 'log' or 'linear', got {spacing!r}",
                              field=_join(path, 'spacing'))
        axis = tuple(float(v) for v in points)
    elif isinstance(value, list):
        if not value:
            raise ConfigError("axis must not be empty", field=path)
        axis = tuple(_required(_number({'v': v}, 'v', path), path) for v in value)
    else:
        raise ConfigError("expected a list or {start, stop, num, spacing}", field=path)
    if any(b <= a for a, b in zip(axis, axis[1:])):
        raise ConfigError("axis must be strictly increasing", field=path)
    return axis


def _parse_system(data: Dict[str, Any]) -> SpinSystem:
    block = _block(data, 'system')
    strict = block.get('strict', True)
    if not isinstance(strict, bool):
        raise ConfigError("expected true or false", field='system.strict')
    ratio = _number(block, 'delta_ratio', 'system')
    try:
        if ratio is not None:
            if 'delta' in block or 'epsilon' in block:
                raise ConfigError("give either delta_ratio or epsilon/delta",
                                  field='system.delta_ratio')
            return SpinSystem.from_ratio(ratio)
        epsilon = _required(_number(block, 'epsilon', 'system'), 'system.epsilon')
        delta = _required(_number(block, 'delta', 'system'), 'system.delta')
        return SpinSystem.create(epsilon, delta, strict=strict)
    except ModelDomainError as e:
        raise ConfigError(str(e), field='system') from e


def _parse_spectral(data: Dict[str, Any]) -> SpectralModel:
    block = _block(data, 'spectral')
    kind = block.get('type')
    eta = _required(_number(block, 'eta', 'spectral'), 'spectral.eta')
    model = None
    try:
        if kind == 'ohmic':
            if 'mu' in block:
                raise ConfigError("mu belongs to the constant model", field='spectral.mu')
            lam = _required(_number(block, 'lambda', 'spectral'), 'spectral.lambda')
            model = SpectralModel.ohmic(eta, lam)
        if kind == 'constant':
            if 'lambda' in block:
                raise ConfigError("lambda belongs to the ohmic model", field='spectral.lambda')
            mu = _required(_number(block, 'mu', 'spectral'), 'spectral.mu')
            model = SpectralModel.constant_gap(eta, mu)
    except ModelDomainError as e:
        raise ConfigError(str(e), field='spectral') from e
    if model is not None:
        _check_breakpoint(model)
        return model
    raise ConfigError(f"type must be 'ohmic' or 'constant', got {kind!r}",
                      field='spectral.type')


def _check_breakpoint(model: SpectralModel) -> None:
    if model.breakpoint == 1.0:
        key = 'lambda' if model.kind is SpectralKind.OHMIC else 'mu'
        raise ConfigError("the breakpoint must differ from omega_0 = 1",
                          field=f"spectral.{key}")


def _parse_drive(data: Dict[str, Any]) -> Drive:
    block = _block(data, 'drive')
    try:
        return Drive(xi=_number(block, 'xi', 'drive', 1e-3),
                     Omega=_number(block, 'Omega', 'drive', 0.10))
    except ModelDomainError as e:
        raise ConfigError(str(e), field='drive') from e


def _parse_initial_state(value: Any) -> Optional[BlochState]:
    path = 'ode.initial_state'
    if value is None or value == 'thermal':
        return None
    if not isinstance(value, dict):
        raise ConfigError("expected 'thermal' or {d_plus_re, d_plus_im, d0}", field=path)
    _check_keys(value, path, _STATE_KEYS)
    d_plus = complex(_number(value, 'd_plus_re', path, 0.0), _number(value, 'd_plus_im', path, 0.0))
    try:
        return BlochState(d_plus, _required(_number(value, 'd0', path), _join(path, 'd0')))
    except ModelDomainError as e:
        raise ConfigError(str(e), field=path) from e


def _parse_ode(data: Dict[str, Any]) -> OdeSettings:
    block = _block(data, 'ode')
    relaxation = block.get('d0_relaxation', 'consistent')
    if relaxation not in D0_RELAXATION_CHOICES:
        raise ConfigError(f"must be one of {D0_RELAXATION_CHOICES}, got {relaxation!r}",
                          field='ode.d0_relaxation')
    dt = _number(block, 'dt', 'ode', 0.01)
    if not dt > 0:
        raise ConfigError("dt must be positive", field='ode.dt')
    tau_end = _number(block, 'tau_end', 'ode')
    if tau_end is not None and not tau_end > 0:
        raise ConfigError("tau_end must be positive", field='ode.tau_end')
    return OdeSettings(
        dt=dt,
        tau_end=tau_end,
        n_periods=_integer(block, 'n_periods', 'ode', 5),
        initial_state=_parse_initial_state(block.get('initial_state')),
        d0_relaxation=relaxation,
    )


def parse_run_config(data: Dict[str, Any]) -> RunConfig:  # pylint: disable=too-many-locals
    """
    Validate a merged run-config dictionary.

    Raises:
        ConfigError: On a missing or unsupported schema_version, unknown keys,
            wrong types or values outside their physical domain
    """
    if not isinstance(data, dict):
        raise ConfigError("run-config must be a JSON object")
    _check_keys(data, '', _ALLOWED_KEYS[''])
    if 'schema_version' not in data:
        raise ConfigError("missing required value", field='schema_version')
    if data['schema_version'] != SCHEMA_VERSION:
        raise ConfigError(f"unsupported schema_version {data['schema_version']!r} "
                          f"(expected {SCHEMA_VERSION})", field='schema_version')

    environment = _block(data, 'environment')
    temperature = _number(environment, 'T', 'environment', 0.0)
    if not temperature >= 0:
        raise ConfigError("temperature must be >= 0", field='environment.T')
    scan = _block(data, 'scan')
    T_axis = None  # pylint: disable=invalid-name
    if 'T_axis' in scan:
        T_axis = parse_axis(scan['T_axis'], 'scan.T_axis')  # pylint: disable=invalid-name
    elif 'T_axis' in environment:
        T_axis = parse_axis(environment['T_axis'], 'environment.T_axis')  # pylint: disable=invalid-name
    if T_axis is not None and T_axis[0] < 0:
        raise ConfigError("temperatures must be >= 0", field='T_axis')
    eta_axis = parse_axis(scan['eta_axis'], 'scan.eta_axis') if 'eta_axis' in scan else None
    if eta_axis is not None and eta_axis[0] <= 0:
        raise ConfigError("eta values must be positive", field='scan.eta_axis')

    quadrature = _block(data, 'quadrature')
    tol = _number(quadrature, 'tol', 'quadrature', 1e-9)
    if not tol > 0:
        raise ConfigError("tol must be positive", field='quadrature.tol')
    panel_limit = _integer(quadrature, 'panel_limit', 'quadrature', 200)
    if panel_limit < 1:
        raise ConfigError("panel_limit must be >= 1", field='quadrature.panel_limit')

    validation = _block(data, 'validation')
    output = _block(data, 'output')
    output_format = output.get('format')
    if output_format is not None and output_format not in OUTPUT_FORMATS:
        raise ConfigError(f"must be one of {OUTPUT_FORMATS}, got {output_format!r}",
                          field='output.format')
    directory = output.get('directory')
    if directory is not None and not isinstance(directory, str):
        raise ConfigError("expected a string", field='output.directory')

    return RunConfig(
        system=_parse_system(data),
        model=_parse_spectral(data),
        drive=_parse_drive(data),
        temperature=temperature,
        T_axis=T_axis,
        eta_axis=eta_axis,
        ode=_parse_ode(data),
        tol=tol,
        panel_limit=panel_limit,
        seed=_integer(validation, 'seed', 'validation', 12345),
        samples=_integer(validation, 'samples', 'validation', 20),
        output_directory=directory,
        output_format=output_format,
    )


def _merge_layer(base: Dict[str, Any], layer: Dict[str, Any]) -> Dict[str, Any]:
    """Deep-merge a layer, letting it replace mutually exclusive keys of the base."""
    base = dict(base)
    system = layer.get('system')
    if isinstance(system, dict) and isinstance(base.get('system'), dict):
        if 'epsilon' in system or 'delta' in system:
            base['system'] = {k: v for k, v in base['system'].items() if k != 'delta_ratio'}
        elif 'delta_ratio' in system:
            base['system'] = {k: v for k, v in base['system'].items()
                              if k not in ('epsilon', 'delta')}
    spectral = layer.get('spectral')
    if (isinstance(spectral, dict) and isinstance(base.get('spectral'), dict)
            and spectral.get('type', base['spectral'].get('type')) != base['spectral'].get('type')):
        base.pop('spectral')
    return deep_merge(base, layer)


def build_run_config(preset: Optional[str] = None, config_path: Optional[str] = None,
                     overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """
    Merge a preset, a config file and command-line overrides, then validate.

    The preset is the base, the file is merged on top and the overrides
    (already shaped as run-config blocks) win over both.

    Raises:
        ConfigError: If neither a preset nor a config file is given, the
            preset is unknown, or the merged config is invalid
    """
    if preset is None and config_path is None:
        raise ConfigError("either --preset or --config is required")
    data: Dict[str, Any] = {}
    if preset is not None:
        try:
            data = get_preset(preset)
        except KeyError as e:
            raise ConfigError(e.args[0], field='preset') from e
    if config_path is not None:
        data = _merge_layer(data, load_config_file(config_path))
    if overrides:
        data = _merge_layer(data, overrides)
    return parse_run_config(data)
