"""
Tests for the decomposition module.
"""

import pytest

from semiperm.congruence import all_congruences, quotient
from semiperm.construction import (
    Construction1Spec,
    Side,
    construct1,
    cyclic_nilpotent,
    group_with_zero,
    trivial_extension,
)
from semiperm.core import is_semilattice
from semiperm.decomposition import (
    Case,
    UpperKind,
    ZeroComponentCase,
    classify,
    identity_sidedness,
    putcha_decomposition,
    smallest_semilattice_congruence,
    split_two_components,
)
from semiperm.enumeration import Mode, enumerate_up_to
from semiperm.groups import Subgroup

from .oracles import permutable_by_oracle


def test_semilattice_congruence_group_with_zero(z2):
    """Test that a group with zero splits into the group and the zero."""
    S = group_with_zero(z2)
    eta = smallest_semilattice_congruence(S)

    assert eta.classes() == [(0, 1), (2,)]
    assert is_semilattice(quotient(S, eta))


def test_semilattice_congruence_chain(chain3):
    """Test that a semilattice is its own decomposition."""
    decomposition = putcha_decomposition(chain3)

    assert decomposition.components == ((0,), (1,), (2,))
    assert decomposition.all_components_archimedean


def test_semilattice_congruence_minimal(chain3, band22, null3):
    """Test that the smallest semilattice congruence refines every congruence with a semilattice quotient."""
    for S in (chain3, band22, null3, cyclic_nilpotent(4)):
        eta = smallest_semilattice_congruence(S)
        for alpha in all_congruences(S):
            if is_semilattice(quotient(S, alpha)):
                assert eta.refines(alpha)


def test_archimedean_semigroups_have_one_component(band22):
    """Test that archimedean semigroups have a single component."""
    for S in (band22, cyclic_nilpotent(4)):
        decomposition = putcha_decomposition(S)
        assert len(decomposition.components) == 1
        assert decomposition.archimedean == (True,)


def test_split_two_components(z2):
    """Test that the lower component of a two-component split is the ideal."""
    S = construct1(Construction1Spec(z2, Subgroup.of([0])))
    upper, lower = split_two_components(putcha_decomposition(S))

    assert upper == (0, 1)
    assert lower == (2, 3, 4)


def test_identity_sidedness(z2):
    """Test how the group identity of the coset construction acts on the nilpotent part."""
    S = construct1(Construction1Spec(z2, Subgroup.of([0])))
    sides = identity_sidedness(S, [0, 1])

    assert sides.identity == 0
    assert sides.is_right_identity
    assert not sides.is_left_identity
    assert sides.eN == {4}
    assert sides.Ne == {2, 3, 4}

    # Verify the mirror image swaps the sides
    mirrored = identity_sidedness(construct1(Construction1Spec(z2, Subgroup.of([0]), Side.LEFT)), [0, 1])
    assert mirrored.is_left_identity
    assert not mirrored.is_right_identity


def test_classify_archimedean(z2, left_zero2, band22):
    """Test the two archimedean families."""
    report = classify(cyclic_nilpotent(4))
    assert report.case is Case.ARCH_CYCLIC_NILPOTENT
    assert report.evidence["generator"] == (0,)

    for S in (z2.carrier, left_zero2, band22):
        assert classify(S).case is Case.ARCH_COMPLETELY_SIMPLE


def test_classify_trivial():
    """Test that the trivial semigroup counts as completely simple."""
    report = classify(cyclic_nilpotent(1))

    assert report.case is Case.ARCH_COMPLETELY_SIMPLE
    assert report.label() == "ArchCompletelySimple"


def test_classify_not_permutable(chain3, null3):
    """Test semigroups with a non-commuting pair of congruences."""
    for S in (chain3, null3):
        report = classify(S)
        assert report.case is Case.NOT_PERMUTABLE
        assert report.permutability.witness is not None


def test_classify_coset_construction(z2):
    """Test both sides of the coset construction."""
    right = classify(construct1(Construction1Spec(z2, Subgroup.of([0]))))
    assert right.label() == "TwoComponent{Group, NullRight}"
    assert right.evidence["upper"] == (0, 1)
    assert right.evidence["kernel"] == (4,)

    left = classify(construct1(Construction1Spec(z2, Subgroup.of([0]), Side.LEFT)))
    assert left.label() == "TwoComponent{Group, NullLeft}"


def test_classify_group_with_zero(z2, chain2):
    """Test groups with a zero adjoined, including the 2-chain."""
    report = classify(group_with_zero(z2))
    assert report.case is Case.TWO_COMPONENT
    assert report.upper_kind is UpperKind.GROUP
    assert report.zero_case is ZeroComponentCase.COMPLETELY_SIMPLE
    assert report.label() == "TwoComponent{Group, CS}"

    assert classify(chain2).label() == "TwoComponent{Group, CS}"


def test_classify_two_sided_identity(z2):
    """Test a group acting trivially on a cyclic nilpotent part."""
    report = classify(trivial_extension(z2, cyclic_nilpotent(3)))

    assert report.zero_case is ZeroComponentCase.NILPOTENT_WITH_IDENTITY
    assert report.evidence["group_identity"] == (0,)


@pytest.mark.parametrize(
    "order",
    [1, 2, 3, pytest.param(4, marks=pytest.mark.slow), pytest.param(5, marks=pytest.mark.slow)],
)
def test_classify_matches_lattice_commutation(order):
    """Test classify against commuting every pair of partition-enumerated congruences."""
    for S in enumerate_up_to(order, Mode.ISO):
        report = classify(S)
        expected = permutable_by_oracle(S.rows)

        assert (report.case is not Case.NOT_PERMUTABLE) == expected, S
        assert report.permutability.permutable == expected, S
        assert report.case is not Case.NOT_PUTCHA, S
