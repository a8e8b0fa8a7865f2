"""
This module provides the decorator that turns a predicate into a registered census check.
"""

from collections.abc import Callable
from functools import wraps

from .registry import Check, CheckRegistry, registry


def check(name: str | None = None, *, tally: bool = False, into: CheckRegistry | None = None):
    """
    Decorator registering a semigroup predicate as a census check.

    Args:
        name: Optional check name; defaults to the function name
        tally: Count how often the predicate holds instead of collecting counterexamples
        into: Registry to use; defaults to the global registry

    Returns:
        Decorator function that registers the check
    """

    def decorator(func: Callable):
        @wraps(func)
        def wrapper(S):
            return func(S)

        doc = (func.__doc__ or "").strip().splitlines()
        entry = Check(name=name or func.__name__, function=wrapper, tally=tally, description=doc[0] if doc else "")
        wrapper._check = entry
        (into or registry).register(entry)
        return wrapper

    return decorator


def install(entry: Check, into: CheckRegistry | None = None) -> None:
    """Register an already built check again, e.g. after the registry was cleared."""
    (into or registry).register(entry)
