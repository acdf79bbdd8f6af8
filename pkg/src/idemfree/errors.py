"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument violates an operation's stated domain."""


class ParseError(DomainError):
    """Sequence text could not be parsed; the message names the bad token."""


class BudgetError(RuntimeError):
    """An enumeration was refused because it exceeds the configured budget."""
