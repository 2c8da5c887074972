from __future__ import annotations


class TutteForgeError(Exception):
    """Base class for errors raised by this package."""


class UnknownElementError(TutteForgeError, KeyError):
    """An element label is not in the ground set."""


class SizeGuardError(TutteForgeError):
    """Input exceeds the size an operation is willing to enumerate."""


class BudgetExceededError(TutteForgeError):
    """A search ran past its configured node budget."""


class VerificationError(TutteForgeError):
    """An internal cross-check failed; indicates a bug, never bad input."""


class ZeroDivisorError(TutteForgeError, ZeroDivisionError):
    """T(-1,-1) vanished, which cannot happen for a binary matroid."""
