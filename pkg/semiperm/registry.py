"""
This module provides functionality for registering and retrieving census checks.
"""

from collections.abc import Callable, Iterable
from dataclasses import dataclass

from .core import FiniteSemigroup
from .errors import CheckRegistrationError

Predicate = Callable[[FiniteSemigroup], bool | None]


@dataclass(frozen=True)
class Check:
    """
    A named predicate over semigroups.

    The function returns True when the property holds, False for a counterexample and None
    when the semigroup is outside the property's hypothesis. A tally only counts how often
    it returns True; it never reports counterexamples.
    """

    name: str
    function: Predicate
    tally: bool = False
    description: str = ""


class CheckRegistry:
    """Registry for storing and retrieving census checks."""

    def __init__(self):
        self._checks: dict[str, Check] = {}

    def register(self, check: Check) -> None:
        """
        Register a check under its name.

        Raises:
            CheckRegistrationError: If another function already holds the name
        """
        existing = self._checks.get(check.name)
        if existing is not None and existing.function is not check.function:
            raise CheckRegistrationError(f"Check {check.name!r} is already registered")
        self._checks[check.name] = check

    def get(self, name: str) -> Check | None:
        return self._checks.get(name)

    def require(self, names: Iterable[str]) -> list[Check]:
        """
        Look up several checks at once, keeping the given order.

        Raises:
            CheckRegistrationError: If a name is unknown
        """
        found = []
        for name in names:
            check = self._checks.get(name)
            if check is None:
                raise CheckRegistrationError(f"Unknown check {name!r}; known: {', '.join(self.names())}")
            found.append(check)
        return found

    def names(self) -> list[str]:
        return sorted(self._checks)

    def clear(self) -> None:
        """Clear all registered checks."""
        self._checks.clear()

    def all_checks(self) -> dict[str, Check]:
        return dict(self._checks)


# Global registry instance
registry = CheckRegistry()
