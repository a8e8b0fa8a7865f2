"""
This package contains the stock census checks.
"""

from ..checks import install
from ..registry import CheckRegistry
from . import lemmas


def load(into: CheckRegistry | None = None) -> list[str]:
    """
    (Re-)register every stock check, e.g. after the registry was cleared.

    Returns:
        The names of the stock checks
    """
    names = []
    for value in vars(lemmas).values():
        entry = getattr(value, "_check", None)
        if entry is not None:
            install(entry, into)
            names.append(entry.name)
    return sorted(names)
