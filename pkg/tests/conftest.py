"""
Shared fixtures: global state resets and a few small semigroups used across test modules.
"""

import pytest

from semiperm import standard
from semiperm.config import reset_settings
from semiperm.core import FiniteSemigroup
from semiperm.groups import cyclic_group
from semiperm.registry import registry

from .samples import chain, rectangular_band


# Reset settings and the stock check registry before each test
@pytest.fixture(autouse=True)
def clear_state():
    reset_settings()
    registry.clear()
    standard.load()
    yield
    reset_settings()


@pytest.fixture
def chain3():
    return chain(3)


@pytest.fixture
def chain2():
    return chain(2)


@pytest.fixture
def left_zero2():
    return FiniteSemigroup([[0, 0], [1, 1]])


@pytest.fixture
def null3():
    """{a, b, 0} with every product 0; 0 is element 2."""
    return FiniteSemigroup([[2, 2, 2]] * 3, ["a", "b", "0"])


@pytest.fixture
def band22():
    return rectangular_band(2, 2)


@pytest.fixture
def z2():
    return cyclic_group(2)


@pytest.fixture
def z4():
    return cyclic_group(4)
