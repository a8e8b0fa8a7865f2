"""
Tests for the registry module.
"""

from unittest.mock import Mock

import pytest

from semiperm.errors import CheckRegistrationError
from semiperm.registry import Check, CheckRegistry


def test_registry_register_and_get():
    """Test registering and retrieving checks."""
    registry = CheckRegistry()

    # Create a check around a mock predicate
    mock_func = Mock(return_value=True)
    entry = Check(name="mock_check", function=mock_func)

    registry.register(entry)

    # Verify it's the same check
    assert registry.get("mock_check") is entry
    assert registry.get("mock_check").function is mock_func

    # Test getting a non-existent check
    assert registry.get("non_existent") is None


def test_registry_all_checks():
    """Test getting all registered checks."""
    registry = CheckRegistry()

    entry1 = Check(name="check1", function=Mock())
    entry2 = Check(name="check2", function=Mock(), tally=True)

    registry.register(entry1)
    registry.register(entry2)

    all_checks = registry.all_checks()

    # Verify all registered checks are returned
    assert len(all_checks) == 2
    assert all_checks["check1"] is entry1
    assert all_checks["check2"] is entry2
    assert registry.names() == ["check1", "check2"]


def test_registry_clear():
    """Test clearing the registry."""
    registry = CheckRegistry()

    entry = Check(name="mock_check", function=Mock())
    registry.register(entry)

    # Verify it's registered
    assert registry.get("mock_check") is entry

    registry.clear()

    # Verify it's cleared
    assert registry.get("mock_check") is None
    assert len(registry.all_checks()) == 0


def test_registry_duplicate_name():
    """Test that a name cannot be taken by a second function, but re-registering is harmless."""
    registry = CheckRegistry()
    mock_func = Mock()

    registry.register(Check(name="mock_check", function=mock_func))
    registry.register(Check(name="mock_check", function=mock_func, description="again"))

    with pytest.raises(CheckRegistrationError):
        registry.register(Check(name="mock_check", function=Mock()))


def test_registry_require():
    """Test looking up several checks in the given order."""
    registry = CheckRegistry()
    entry1 = Check(name="b_check", function=Mock())
    entry2 = Check(name="a_check", function=Mock())
    registry.register(entry1)
    registry.register(entry2)

    assert registry.require(["b_check", "a_check"]) == [entry1, entry2]
    assert registry.require([]) == []

    # Verify unknown names are reported with the known ones
    with pytest.raises(CheckRegistrationError) as excinfo:
        registry.require(["a_check", "missing"])
    assert "missing" in str(excinfo.value)
    assert "a_check, b_check" in str(excinfo.value)
