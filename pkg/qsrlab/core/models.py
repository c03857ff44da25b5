#!/usr/bin/env python3
"""
Data models for the driven spin-boson analysis.

This module contains the data classes used throughout qsr-lab, including
TypedDict definitions for the structured records written as JSON.

Unit convention: every frequency, rate and temperature is expressed in units
of the system frequency omega_0 (so omega_0 == 1, k_B == 1) and rescaled time
tau is in units of 1/omega_0.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from .exceptions import ArgumentError, ModelDomainError

try:
    from typing import TypedDict
except ImportError:
    from typing_extensions import TypedDict


# |epsilon^2 + delta^2 - 1| accepted by the strict SpinSystem constructor
NORMALIZATION_TOLERANCE = 1e-9

# Slack allowed on the Bloch-ball constraints of a state
BLOCH_TOLERANCE = 1e-6

# Drive amplitudes above this leave the O(xi) regime of the response formulas
PERTURBATIVE_XI_LIMIT = 0.05


class SpectralKind(Enum):
    """Model spectral density families."""
    OHMIC = "ohmic"
    CONSTANT = "constant"


@dataclass(frozen=True)
class SpectralModel:
    """Piecewise bath spectral density J(omega) with noise strength eta.

    ``cutoff`` is Lambda for the Ohmic family (J = eta*omega below it,
    eta*Lambda above) and mu for the constant-gap family (J = 0 below it,
    eta above). The value at the breakpoint uses the upper branch.
    """
    kind: SpectralKind
    eta: float
    cutoff: float

    def __post_init__(self):
        if not (math.isfinite(self.eta) and self.eta > 0):
            raise ModelDomainError(f"eta must be positive, got {self.eta}")
        if not (math.isfinite(self.cutoff) and self.cutoff > 0):
            name = 'lambda' if self.kind is SpectralKind.OHMIC else 'mu'
            raise ModelDomainError(f"{name} must be positive, got {self.cutoff}")

    @classmethod
    def ohmic(cls, eta: float, lam: float) -> 'SpectralModel':
        """Ohmic case: linear up to Lambda, plateau eta*Lambda beyond."""
        return cls(SpectralKind.OHMIC, eta, lam)

    @classmethod
    def constant_gap(cls, eta: float, mu: float) -> 'SpectralModel':
        """Constant case: zero below the gap mu, eta above."""
        return cls(SpectralKind.CONSTANT, eta, mu)

    @property
    def breakpoint(self) -> float:
        """Frequency where the piecewise definition switches branch."""
        return self.cutoff

    @property
    def plateau(self) -> float:
        """Limit of J(omega) as omega -> infinity."""
        if self.kind is SpectralKind.OHMIC:
            return self.eta * self.cutoff
        return self.eta

    def with_eta(self, eta: float) -> 'SpectralModel':
        """Same family and cutoff with a different noise strength."""
        return SpectralModel(self.kind, eta, self.cutoff)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the run-config representation"""
        cutoff_key = 'lambda' if self.kind is SpectralKind.OHMIC else 'mu'
        return {'type': self.kind.value, 'eta': self.eta, cutoff_key: self.cutoff}


@dataclass(frozen=True)
class Environment:
    """Bath temperature in units of omega_0 / k_B; T == 0 means vacuum."""
    temperature: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.temperature) and self.temperature >= 0):
            raise ModelDomainError(
                f"temperature must be finite and >= 0, got {self.temperature}")

    @classmethod
    def from_beta(cls, beta: float) -> 'Environment':
        """Build from the inverse temperature beta*omega_0 (inf means T = 0)."""
        if not beta > 0:
            raise ModelDomainError(f"beta must be positive, got {beta}")
        if math.isinf(beta):
            return cls(0.0)
        return cls(1.0 / beta)

    @property
    def beta(self) -> float:
        """Inverse temperature, infinite at T = 0."""
        if self.temperature == 0:
            return math.inf
        return 1.0 / self.temperature

    @property
    def thermal_polarization(self) -> float:
        """tanh(beta/2); the thermal fixed point of <D0> is its negative."""
        if self.temperature == 0:
            return 1.0
        return math.tanh(0.5 * self.beta)


@dataclass(frozen=True)
class SpinSystem:
    """Two-level system with bias epsilon and tunneling delta (omega_0 == 1)."""
    epsilon: float
    delta: float

    def __post_init__(self):
        if not (math.isfinite(self.epsilon) and math.isfinite(self.delta)):
            raise ModelDomainError("epsilon and delta must be finite")
        if self.delta < 0:
            raise ModelDomainError(f"delta must be >= 0, got {self.delta}")
        norm = self.epsilon ** 2 + self.delta ** 2
        if abs(norm - 1.0) > NORMALIZATION_TOLERANCE:
            raise ModelDomainError(
                f"epsilon^2 + delta^2 must equal 1 in units of omega_0, got {norm!r}; "
                "pass strict=False to normalize")

    @classmethod
    def create(cls, epsilon: float, delta: float, strict: bool = True) -> 'SpinSystem':
        """Build from (epsilon, delta), normalizing by omega_0 unless strict.

        Raises:
            ModelDomainError: If strict and the pair is not normalized, or if
                both components vanish.
        """
        if strict:
            return cls(epsilon, delta)
        omega0 = math.hypot(epsilon, delta)
        if omega0 == 0:
            raise ModelDomainError("epsilon and delta cannot both be zero")
        return cls(epsilon / omega0, delta / omega0)

    @classmethod
    def from_ratio(cls, delta_ratio: float) -> 'SpinSystem':
        """Build from Delta/omega_0 with a non-negative bias."""
        if not 0 <= delta_ratio <= 1:
            raise ModelDomainError(
                f"delta_ratio must lie in [0, 1], got {delta_ratio}")
        return cls(math.sqrt(1.0 - delta_ratio ** 2), delta_ratio)

    @property
    def mixing_angle(self) -> float:
        """Angle theta with tan(theta) = delta / epsilon."""
        return math.atan2(self.delta, self.epsilon)


class KineticCoefficientsDict(TypedDict):
    """JSON record of :class:`KineticCoefficients`."""
    gamma: float
    gamma_beta: float
    sigma_beta: float
    omega_R_beta: float
    quad_error: float


@dataclass(frozen=True)
class KineticCoefficients:
    """Damping and frequency-shift coefficients at one temperature."""
    gamma: float
    gamma_beta: float
    sigma_beta: float
    omega_R_beta: float
    quad_error: float = 0.0

    def to_dict(self) -> KineticCoefficientsDict:
        """Convert to dictionary format for JSON serialization"""
        return {
            'gamma': self.gamma,
            'gamma_beta': self.gamma_beta,
            'sigma_beta': self.sigma_beta,
            'omega_R_beta': self.omega_R_beta,
            'quad_error': self.quad_error,
        }


@dataclass(frozen=True)
class Drive:
    """Weak periodic perturbation W = xi * X * sin(Omega * tau)."""
    xi: float
    Omega: float  # pylint: disable=invalid-name

    def __post_init__(self):
        if not (math.isfinite(self.xi) and self.xi >= 0):
            raise ModelDomainError(f"xi must be >= 0, got {self.xi}")
        if not (math.isfinite(self.Omega) and self.Omega > 0):
            raise ModelDomainError(f"Omega must be positive, got {self.Omega}")

    @property
    def is_perturbative(self) -> bool:
        """False when the O(xi) response formulas are not trustworthy."""
        return self.xi <= PERTURBATIVE_XI_LIMIT

    @property
    def period(self) -> float:
        """Drive period 2*pi/Omega."""
        return 2.0 * math.pi / self.Omega


@dataclass(frozen=True)
class ResponsePoint:
    """Stationary linear response at one (coefficients, Omega) point."""
    amplitude: float
    phase: float
    snr: float
    x_eq: float


@dataclass(frozen=True)
class BlochState:
    """Expectation values <D+> (complex) and <D0> (real).

    <D-> is always the complex conjugate of ``d_plus``.
    """
    d_plus: complex
    d0: float

    def __post_init__(self):
        object.__setattr__(self, 'd_plus', complex(self.d_plus))
        object.__setattr__(self, 'd0', float(self.d0))
        if abs(self.d0) > 1.0 + BLOCH_TOLERANCE:
            raise ModelDomainError(f"d0 must lie in [-1, 1], got {self.d0}")
        if abs(self.d_plus) ** 2 > (1.0 - self.d0 ** 2) / 4.0 + BLOCH_TOLERANCE:
            raise ModelDomainError(
                f"state (d_plus={self.d_plus}, d0={self.d0}) violates "
                "|d_plus|^2 <= (1 - d0^2)/4")

    @property
    def d_minus(self) -> complex:
        """<D-> = conj(<D+>)."""
        return self.d_plus.conjugate()

    @property
    def populations(self) -> Tuple[float, float]:
        """Diagonal density-matrix elements (<+|rho|+>, <-|rho|->)."""
        return 0.5 * (1.0 + self.d0), 0.5 * (1.0 - self.d0)


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Sampled evolution of a BlochState together with X(tau)."""
    times: np.ndarray
    d_plus: np.ndarray
    d0: np.ndarray
    x_values: np.ndarray

    def __post_init__(self):
        n = len(self.times)
        if not len(self.d_plus) == len(self.d0) == len(self.x_values) == n:
            raise ArgumentError("trajectory arrays must have equal lengths")
        if n > 1 and not np.all(np.diff(self.times) > 0):
            raise ArgumentError("trajectory times must be strictly increasing")
        for array in (self.times, self.d_plus, self.d0, self.x_values):
            array.setflags(write=False)

    def __len__(self) -> int:
        return len(self.times)

    @property
    def states(self) -> List[BlochState]:
        """Per-sample BlochState objects (built on demand)."""
        return [BlochState(complex(dp), float(z))
                for dp, z in zip(self.d_plus, self.d0)]

    @property
    def final_state(self) -> BlochState:
        """State at the last recorded time."""
        return BlochState(complex(self.d_plus[-1]), float(self.d0[-1]))


class ResonanceKind(Enum):
    """Resonance phenomenology of an R(T) curve."""
    NO_RESONANCE = "NoResonance"
    SINGLE_RESONANCE = "SingleResonance"
    ANTI_RESONANCE = "AntiResonance"
    DOUBLE_RESONANCE = "DoubleResonance"


class ResonanceReportDict(TypedDict):
    """JSON record of :class:`ResonanceReport`."""
    eta: Optional[float]
    kind: Optional[str]
    peak_temperatures: List[float]
    dip_temperature: Optional[float]
    omega_R_zero_crossing: Optional[float]


@dataclass(frozen=True)
class ResonanceReport:
    """
    Classification of one SNR-versus-temperature curve.

    kind is None when the curve could not be classified.
    """
    kind: Optional[ResonanceKind]
    peak_temperatures: Tuple[float, ...] = ()
    dip_temperature: Optional[float] = None
    omega_R_zero_crossing: Optional[float] = None  # pylint: disable=invalid-name
    eta: Optional[float] = None

    def __post_init__(self):
        n_peaks = len(self.peak_temperatures)
        if self.kind is ResonanceKind.SINGLE_RESONANCE and n_peaks != 1:
            raise ArgumentError("SingleResonance requires exactly one peak")
        if self.kind is ResonanceKind.DOUBLE_RESONANCE and n_peaks != 2:
            raise ArgumentError("DoubleResonance requires exactly two peaks")
        if self.kind is ResonanceKind.ANTI_RESONANCE and (
                self.dip_temperature is None or self.omega_R_zero_crossing is None):
            raise ArgumentError(
                "AntiResonance requires a dip and an omega_R zero crossing")

    def to_dict(self) -> ResonanceReportDict:
        """Convert to dictionary format for JSON serialization"""
        return {
            'eta': self.eta,
            'kind': None if self.kind is None else self.kind.value,
            'peak_temperatures': list(self.peak_temperatures),
            'dip_temperature': self.dip_temperature,
            'omega_R_zero_crossing': self.omega_R_zero_crossing,
        }


def _strictly_increasing(values: Tuple[float, ...]) -> bool:
    return all(b > a for a, b in zip(values, values[1:]))


@dataclass(frozen=True)
class ScanSpec:  # pylint: disable=too-many-instance-attributes
    """Grid definition for an SNR sweep over the (eta, T) plane."""
    model_family: SpectralKind
    cutoff: float
    eta_axis: Tuple[float, ...]
    T_axis: Tuple[float, ...]  # pylint: disable=invalid-name
    system: SpinSystem
    Omega: float  # pylint: disable=invalid-name
    tol: float = 1e-9
    panel_limit: int = 200

    def __post_init__(self):
        object.__setattr__(self, 'eta_axis', tuple(float(v) for v in self.eta_axis))
        object.__setattr__(self, 'T_axis', tuple(float(v) for v in self.T_axis))
        if not self.eta_axis or not self.T_axis:
            raise ArgumentError("scan axes must be non-empty")
        if not _strictly_increasing(self.eta_axis):
            raise ArgumentError("eta_axis must be strictly increasing")
        if not _strictly_increasing(self.T_axis):
            raise ArgumentError("T_axis must be strictly increasing")
        if self.eta_axis[0] <= 0:
            raise ModelDomainError("all eta values must be positive")
        if self.T_axis[0] < 0:
            raise ModelDomainError("all temperatures must be >= 0")
        if not self.Omega > 0:
            raise ModelDomainError(f"Omega must be positive, got {self.Omega}")
        if not self.tol > 0:
            raise ArgumentError(f"tol must be positive, got {self.tol}")
        if self.panel_limit < 1:
            raise ArgumentError(f"panel_limit must be at least 1, got {self.panel_limit}")

    def model_for(self, eta: float) -> SpectralModel:
        """Spectral model of this family at noise strength eta."""
        return SpectralModel(self.model_family, eta, self.cutoff)

    @property
    def shape(self) -> Tuple[int, int]:
        """Grid dimensions (len(eta_axis), len(T_axis))."""
        return len(self.eta_axis), len(self.T_axis)


@dataclass(frozen=True, eq=False)
class ScanResult:
    """SNR and coefficient grids over (eta_i, T_j) plus per-eta reports.

    Missing cells (numerical failure) hold NaN in every grid.
    """
    spec: ScanSpec
    snr_grid: np.ndarray
    omega_R_grid: np.ndarray  # pylint: disable=invalid-name
    gamma_beta_grid: np.ndarray
    sigma_beta_grid: np.ndarray
    classifications: Tuple[ResonanceReport, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for grid in (self.snr_grid, self.omega_R_grid,
                     self.gamma_beta_grid, self.sigma_beta_grid):
            if grid.shape != self.spec.shape:
                raise ArgumentError(
                    f"grid shape {grid.shape} does not match axes {self.spec.shape}")
        finite = self.snr_grid[np.isfinite(self.snr_grid)]
        if np.any(finite < 0):
            raise ArgumentError("SNR values must be non-negative")

    @property
    def missing_cells(self) -> int:
        """Number of cells whose evaluation failed."""
        return int(np.count_nonzero(np.isnan(self.snr_grid)))
