"""Utility modules for the qsr-lab CLI."""

from . import artifacts
from . import formatter
from . import rendering

__all__ = ['artifacts', 'formatter', 'rendering']
