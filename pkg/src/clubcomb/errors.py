"""Exception types shared across the package.

Every error raised on a bad input (as opposed to an internal bug, which
surfaces as AssertionError) derives from ClubCombError, so callers can
catch the whole family at once.  The CLI maps subfamilies to exit codes.
"""

from __future__ import annotations


class ClubCombError(Exception):
    """Base class for all expected failures."""


class ArityMismatch(ClubCombError):
    """Two objects were combined whose arities do not line up."""


class IndexOutOfRange(ClubCombError):
    """An index fell outside the 1-based range it must live in."""


class CodomainMismatch(ClubCombError):
    """Copairing was attempted over functions with unequal codomains."""


class NotInClub(ClubCombError):
    """A finite function was asked to factor in a club it does not inhabit."""

    def __init__(self, message: str, minimal):
        super().__init__(message)
        self.minimal = minimal  # the smallest club that does contain it


class ClubViolation(ClubCombError):
    """A polynomial's usage function lies outside the requested club."""

    def __init__(self, message: str, minimal):
        super().__init__(message)
        self.minimal = minimal


class ParseError(ClubCombError):
    """Input text does not match the grammar."""


class UndeclaredVariable(ParseError):
    """A term mentions an identifier missing from the context."""


class DuplicateContextVariable(ParseError):
    """The same identifier was declared twice in one context."""


class ArityZero(ClubCombError):
    """A compilation was requested for a polynomial with no arguments."""


class FuelExhausted(ClubCombError):
    """Reduction did not reach a normal form within the step budget."""

    def __init__(self, message: str, steps: int):
        super().__init__(message)
        self.steps = steps
