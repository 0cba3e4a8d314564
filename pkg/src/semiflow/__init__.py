"""Numerical laboratory for non-elliptic semigroups of holomorphic self-maps of the unit disk."""
from .errors import CapabilityError, DomainError, DomainEscape, InsufficientSamples, NoConvergence

__version__ = "0.1.0"
