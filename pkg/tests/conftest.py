"""Shared pytest fixtures for qsr-lab tests."""

import json
import math

import pytest

from qsrlab.core.models import KineticCoefficients, SpectralModel, SpinSystem
from qsrlab.config.presets import CONSTANT_GAP, DELTA_RATIO, OHMIC_CUTOFF


def make_coefficients(omega_R: float = 0.6, gamma_beta: float = 0.1,  # pylint: disable=invalid-name
                      polarization: float = 1.0) -> KineticCoefficients:
    """
    Build consistent synthetic coefficients.

    Keyword Args:
        omega_R: Renormalized frequency (sigma is 1 - omega_R)
        gamma_beta: Thermal damping rate
        polarization: tanh(beta/2); gamma is gamma_beta * polarization

    Returns:
        KineticCoefficients with gamma/gamma_beta equal to the polarization
    """
    return KineticCoefficients(
        gamma=gamma_beta * polarization,
        gamma_beta=gamma_beta,
        sigma_beta=1.0 - omega_R,
        omega_R_beta=omega_R,
    )


def ohmic_closed_form(system: SpinSystem, eta: float, lam: float) -> float:
    """Zero-temperature sigma of the Ohmic model from its antiderivative."""
    integral = 0.5 * math.log(abs(lam ** 2 - 1.0)) + 0.5 * lam * math.log(abs((lam + 1.0) / (lam - 1.0)))
    return system.epsilon ** 2 * 2.0 / math.pi * eta * integral


@pytest.fixture
def preset_system():
    """Spin system with Delta = 0.35 and positive bias."""
    return SpinSystem.from_ratio(DELTA_RATIO)


@pytest.fixture
def ohmic_model():
    """Ohmic model with eta = 0.59 and Lambda = 2."""
    return SpectralModel.ohmic(0.59, OHMIC_CUTOFF)


@pytest.fixture
def constant_model():
    """Constant-gap model with eta = 3.5 and mu = 0.5."""
    return SpectralModel.constant_gap(3.5, CONSTANT_GAP)


@pytest.fixture
def write_config(tmp_path):
    """Return a function writing a run-config dict (or raw text) to a file."""
    counter = {'n': 0}

    def _write(content) -> str:
        counter['n'] += 1
        path = tmp_path / f"config_{counter['n']}.json"
        text = content if isinstance(content, str) else json.dumps(content, indent=2)
        path.write_text(text, encoding='utf-8')
        return str(path)

    return _write
