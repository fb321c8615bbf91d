"""Typed errors raised by the library; the CLI maps them onto exit codes."""

from __future__ import annotations


class DimensionError(ValueError):
    """Matrix arguments have an unsupported or mismatched dimension."""


class NotHermitianError(ValueError):
    """Input expected to be Hermitian deviates beyond tolerance."""


class ConvergenceError(RuntimeError):
    """Iterative eigensolver failed to converge within the sweep cap."""


class DomainError(ValueError):
    """A physical parameter lies outside its admissible range."""


class SingularEvolutionError(ArithmeticError):
    """Non-unitary evolution produced a numerator with vanishing trace."""


class UnknownPresetError(ValueError):
    """Requested figure preset name is not in the catalog."""


class IoError(OSError):
    """Output destination could not be written."""
