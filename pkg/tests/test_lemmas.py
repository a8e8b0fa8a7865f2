"""
Tests for the stock census checks.
"""

import pytest

from semiperm.construction import (
    Construction1Spec,
    construct1,
    cyclic_nilpotent,
    group_with_zero,
    layered_extension,
    null_semigroup,
    trivial_extension,
)
from semiperm.enumeration import Mode, enumerate_up_to
from semiperm.groups import Subgroup, cyclic_group, symmetric_group
from semiperm.registry import registry
from semiperm.standard import lemmas


def failures(order: int, mode: Mode) -> list[tuple[str, tuple]]:
    """Every (check, table) pair where a stock check returns False."""
    checks = [c for c in registry.all_checks().values() if not c.tally]
    found = []
    for S in enumerate_up_to(order, mode):
        for entry in checks:
            if entry.function(S) is False:
                found.append((entry.name, S.rows))
    return found


@pytest.mark.parametrize("order", [1, 2, 3])
def test_stock_checks_small_orders(order):
    """Test that no stock check has a counterexample up to order 3."""
    assert failures(order, Mode.LABELED) == []


@pytest.mark.slow
def test_stock_checks_order_4():
    """Test that no stock check has a counterexample at order 4."""
    assert failures(4, Mode.ISO) == []


def test_lemma8(chain2, chain3):
    """Test the permutable semilattices."""
    assert lemmas.lemma8(chain2) is True
    assert lemmas.lemma8(chain3) is True
    assert lemmas.lemma8(cyclic_nilpotent(3)) is None


def test_lemma2(chain3, null3):
    """Test that the ideal chain check only applies to permutable semigroups."""
    assert lemmas.lemma2(cyclic_nilpotent(4)) is True
    assert lemmas.lemma2(chain3) is None
    assert lemmas.lemma2(null3) is None


def test_lemma3(null3):
    """Test nil semigroups with and without an ideal chain."""
    assert lemmas.lemma3(cyclic_nilpotent(4)) is True
    assert lemmas.lemma3(null3) is True
    assert lemmas.lemma3(cyclic_group(2).carrier) is None


def test_theorem1(band22, left_zero2):
    """Test the archimedean dichotomy on both families."""
    assert lemmas.theorem1(cyclic_nilpotent(4)) is True
    assert lemmas.theorem1(band22) is True
    # Not permutable
    assert lemmas.theorem1(null_semigroup(3)) is None
    assert lemmas.theorem1_converse(left_zero2) is True
    assert lemmas.theorem1_converse(cyclic_nilpotent(5)) is True


def test_theorem2():
    """Test the one-sided check on coset constructions, permutable or not."""
    S3 = symmetric_group(3)
    assert lemmas.theorem2(construct1(Construction1Spec(S3, Subgroup.of([0, 3, 4])))) is True
    assert lemmas.theorem2(construct1(Construction1Spec(S3, Subgroup.of([0])))) is True
    assert lemmas.theorem2(cyclic_nilpotent(3)) is None


def test_theorem3(z2):
    """Test the two-sided check on layered and trivial extensions."""
    assert lemmas.theorem3(layered_extension(z2, 3)) is True
    assert lemmas.theorem3(trivial_extension(z2, null_semigroup(3))) is True
    assert lemmas.theorem3(construct1(Construction1Spec(z2, Subgroup.of([0])))) is None


def test_two_sided_lemmas(z2):
    """Test the layer lemmas on a permutable two-sided extension."""
    S = layered_extension(z2, 3)

    assert lemmas.lemma18(S) is True
    assert lemmas.lemma19(S) is True
    assert lemmas.lemma20(S) is True
    assert lemmas.lemma12(S) is True


def test_one_sided_lemmas():
    """Test the one-sided lemmas on the coset construction."""
    S = construct1(Construction1Spec(cyclic_group(4), Subgroup.of([0, 2])))

    assert lemmas.lemma13(S) is True
    assert lemmas.lemma15(S) is True
    assert lemmas.lemma16(S) is True
    # Not of the two-sided form
    assert lemmas.lemma18(S) is None


def test_classification_check(z2, chain3):
    """Test that the classifier check accepts named cases."""
    for S in (group_with_zero(z2), chain3, cyclic_nilpotent(4)):
        assert lemmas.classification(S) is True


def test_tallies(chain2, chain3):
    """Test the tally checks."""
    assert lemmas.permutable(chain2) is True
    assert lemmas.permutable(chain3) is False
    assert lemmas.nil(cyclic_nilpotent(3)) is True
    assert lemmas.archimedean(chain2) is False
