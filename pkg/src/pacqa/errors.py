"""Exception hierarchy.

Input problems (bad quivers, bad generator sets, DSL syntax) raise subclasses
of :class:`InputError` and map to CLI exit code 1.  :class:`FalsificationError`
is reserved for internal disagreements between independent engines (normal
form vs. linear algebra) and maps to exit code 2.
"""
from __future__ import annotations


class PacqaError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PacqaError):
    """User-supplied data is invalid."""


class QuiverError(InputError):
    """Malformed quiver: duplicate names, dangling endpoints, bad paths."""


class IdealError(InputError):
    """Malformed ideal generator set."""


class DslError(InputError):
    """Syntax or semantic error in a spec file, with a source line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class HypothesisError(PacqaError):
    """A theorem-mode operation was called outside its hypotheses."""


class BudgetError(PacqaError):
    """A computation would exceed the configured size budget."""


class FalsificationError(PacqaError):
    """Two independent engines disagree, or an internal consistency
    assertion failed.  This never indicates bad input."""
