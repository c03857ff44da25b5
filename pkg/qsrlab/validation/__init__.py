"""Independent oracles and the built-in validation suite."""

from .oracles import OracleEstimate, closed_form_sigma, exclusion_sigma, subtracted_sigma
from .suite import CheckResult, ValidationReport, run_validation_suite

__all__ = [
    'OracleEstimate',
    'closed_form_sigma',
    'exclusion_sigma',
    'subtracted_sigma',
    'CheckResult',
    'ValidationReport',
    'run_validation_suite',
]
