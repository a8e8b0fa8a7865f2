"""
Tests for the checks module and the stock check package.
"""

import pytest

from semiperm import standard
from semiperm.checks import check, install
from semiperm.errors import CheckRegistrationError
from semiperm.registry import CheckRegistry, registry


def test_check_decorator():
    """Test that the check decorator registers a named predicate."""
    local = CheckRegistry()

    @check(into=local)
    def has_zero(S):
        """Semigroups with a zero.

        Longer explanation that should not end up in the description.
        """
        return True

    entry = local.get("has_zero")

    # Verify the check is registered under the function name
    assert entry is not None
    assert entry.function is has_zero
    assert has_zero._check is entry
    assert entry.description == "Semigroups with a zero."
    assert not entry.tally

    # Verify the global registry is untouched
    assert registry.get("has_zero") is None


def test_check_decorator_with_custom_name(chain2):
    """Test custom names, tallies and calling the wrapped predicate."""
    local = CheckRegistry()

    @check("two_elements", tally=True, into=local)
    def order_two(S):
        return S.order == 2

    entry = local.get("two_elements")
    assert entry.tally
    assert entry.description == ""
    assert entry.function(chain2) is True
    assert order_two(chain2) is True
    assert local.get("order_two") is None


def test_check_decorator_global_registry():
    """Test that checks land in the global registry by default."""

    @check()
    def always(S):
        return True

    assert registry.get("always") is always._check

    # Verify a second function cannot take the name
    with pytest.raises(CheckRegistrationError):

        @check("always")
        def other(S):
            return False


def test_install():
    """Test registering an existing check again after the registry was cleared."""
    local = CheckRegistry()

    @check(into=local)
    def always(S):
        return True

    local.clear()
    install(always._check, into=local)
    assert local.get("always") is always._check


def test_standard_load():
    """Test that the stock checks can be loaded into a fresh registry."""
    local = CheckRegistry()
    names = standard.load(into=local)

    assert names == local.names()
    for name in ("lemma2", "lemma8", "theorem1", "theorem2", "theorem3", "permutable"):
        assert name in names
    assert local.get("permutable").tally
    assert not local.get("lemma2").tally
    assert local.get("lemma2").description

    # Verify loading twice is harmless
    assert standard.load(into=local) == names


def test_global_registry_has_stock_checks():
    """Test that the autouse fixture leaves the stock checks registered."""
    assert set(standard.load()) <= set(registry.names())
