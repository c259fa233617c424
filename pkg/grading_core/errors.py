"""
Exception hierarchy shared by every algebra package.

Constructors and predicates raise these; the CLI maps them to exit status 2.
Every error that can point at a concrete failure carries it in `witness`.
"""

from __future__ import annotations

from typing import Any


class AlgebraError(ValueError):
    """Base class for rejected structures and invalid requests."""

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class InvalidArgument(AlgebraError):
    """Raised when an operation's precondition fails (bad n, bad profile, ...)."""


class AxiomViolation(AlgebraError):
    """Raised when an operation table breaks a group, ring or module law."""


class GradingInconsistent(AlgebraError):
    """Raised when components are not a direct sum or break R_a M_b in M_ab."""


class NotGraded(AlgebraError):
    """Raised when a closure has a member whose homogeneous component is missing."""


class Unsupported(AlgebraError):
    """Raised for requests outside what a decision procedure covers."""


class InvariantBreach(RuntimeError):
    """An internal invariant failed. This is a bug, not bad input."""
