"""
Tests for the core module.
"""

import numpy as np
import pytest

from semiperm.construction import Construction1Spec, construct1, cyclic_nilpotent
from semiperm.core import (
    Adjoined,
    FiniteSemigroup,
    adjoin,
    associativity_witness,
    element_power,
    generated_subsemigroup,
    is_isomorphism,
    is_monogenic,
    is_semilattice,
    power_sequence,
    restrict,
    special_elements,
    transpose,
    validate_table,
)
from semiperm.errors import ElementError, NonAssociativeError, NotASubsemigroupError, ShapeError
from semiperm.groups import Subgroup, cyclic_group


def test_validate_left_zero():
    """Test that the left-zero band of order 2 is accepted."""
    S = validate_table(2, [[0, 0], [1, 1]])

    assert S.order == 2
    assert S.rows == ((0, 0), (1, 1))
    assert S.mul(1, 0) == 1


def test_validate_reports_first_failing_triple():
    """Test that a non-associative table is rejected with its witness triple."""
    with pytest.raises(NonAssociativeError) as excinfo:
        validate_table(2, [[1, 0], [0, 0]])

    # (0·0)·1 = 0 but 0·(0·1) = 1
    assert excinfo.value.witness == (0, 0, 1)


def test_validate_shape_errors():
    """Test that malformed tables raise ShapeError."""
    with pytest.raises(ShapeError):
        validate_table(0, [])
    with pytest.raises(ShapeError):
        validate_table(2, [[0, 1]])
    with pytest.raises(ShapeError):
        validate_table(2, [[0, 2], [1, 0]])
    with pytest.raises(ShapeError):
        validate_table(2, [[0.5, 1], [1, 0]])
    with pytest.raises(ShapeError):
        validate_table(2, [[0, 1], [1, 0]], labels=["only-one"])


def test_validate_group_table(z4):
    """Test that Z4 passes validation and keeps its labels."""
    S = validate_table(4, z4.carrier.table, labels=["0", "1", "2", "3"])

    assert S == z4.carrier
    assert S.label(3) == "3"


def test_associativity_witness_vectorised():
    """Test the numpy triple scan directly."""
    assert associativity_witness(np.array([[0, 0], [1, 1]])) is None
    assert associativity_witness(np.array([[1, 0], [0, 0]])) == (0, 0, 1)


def test_element_power(z4, left_zero2):
    """Test powers in a group, a cyclic nilpotent semigroup and a band."""
    assert element_power(z4.carrier, 1, 4) == 0
    cn3 = cyclic_nilpotent(3)
    assert element_power(cn3, 0, 3) == 2
    assert cn3.label(element_power(cn3, 0, 3)) == "0"
    assert element_power(left_zero2, 1, 5) == 1


def test_element_power_laws(z4):
    """Test a^(i+j) = a^i a^j for all small exponents."""
    S = cyclic_nilpotent(4)
    for T in (S, z4.carrier):
        for a in T.elements():
            for i in range(1, 9):
                for j in range(1, 9):
                    assert element_power(T, a, i + j) == T.mul(element_power(T, a, i), element_power(T, a, j))


def test_element_power_errors(z4):
    """Test range checks on elements and exponents."""
    with pytest.raises(ElementError):
        element_power(z4.carrier, 4, 1)
    with pytest.raises(ElementError):
        element_power(z4.carrier, 1, 0)


def test_power_sequence():
    """Test that power sequences stop at the first repeat."""
    S = cyclic_nilpotent(4)
    assert power_sequence(S, 0) == [0, 1, 2, 3]
    assert power_sequence(S, 3) == [3]


def test_special_elements_cyclic_nilpotent():
    """Test that a cyclic nilpotent semigroup has a zero and no identity."""
    special = special_elements(cyclic_nilpotent(3))

    assert special.zero == 2
    assert special.identity is None
    assert special.idempotents == {2}


def test_special_elements_group(z2):
    """Test that Z2 has an identity and no zero."""
    special = special_elements(z2.carrier)

    assert special.identity == 0
    assert special.zero is None


def test_special_elements_construction(z2):
    """Test that the group identity of the coset construction is a right identity only."""
    S = construct1(Construction1Spec(z2, Subgroup((0,))))
    special = special_elements(S)

    assert special.zero == S.order - 1
    assert 0 in special.right_identities
    assert 0 not in special.left_identities
    assert special.identity is None


def test_adjoin_identity(left_zero2):
    """Test adjoining an identity to the left-zero band."""
    M = adjoin(left_zero2, Adjoined.IDENTITY)

    assert M.order == 3
    assert special_elements(M).identity == 2
    # Existing products are unchanged
    assert restrict(M, [0, 1])[0] == left_zero2


def test_adjoin_identity_to_trivial():
    """Test that the trivial semigroup with an identity is the 2-chain."""
    M = adjoin(FiniteSemigroup([[0]]), "identity")

    assert is_semilattice(M)
    assert M.rows == ((0, 0), (0, 1))


def test_adjoin_zero(z2):
    """Test that adjoining a zero to Z2 gives a group with zero of order 3."""
    S = adjoin(z2.carrier, Adjoined.ZERO)

    assert S.order == 3
    assert special_elements(S).zero == 2
    assert S.label(2) == "0"


def test_generated_subsemigroup(z4, left_zero2):
    """Test worklist closure from a few generators."""
    assert generated_subsemigroup(z4.carrier, [1]) == {0, 1, 2, 3}
    assert generated_subsemigroup(cyclic_nilpotent(4), [0]) == {0, 1, 2, 3}
    assert generated_subsemigroup(left_zero2, [0]) == {0}

    closed = generated_subsemigroup(z4.carrier, [2])
    assert generated_subsemigroup(z4.carrier, closed) == closed

    with pytest.raises(ElementError):
        generated_subsemigroup(z4.carrier, [])


def test_is_monogenic(band22):
    """Test the smallest-generator rule."""
    assert is_monogenic(cyclic_nilpotent(5)) == 0
    assert is_monogenic(band22) is None
    assert is_monogenic(cyclic_group(6).carrier) == 1


def test_restrict_and_errors(chain3):
    """Test re-indexing a subsemigroup and rejecting non-closed subsets."""
    sub, members = restrict(chain3, [1, 2])

    assert members == (1, 2)
    assert sub.rows == ((0, 0), (0, 1))
    assert sub.labels == ("e1", "e2")

    with pytest.raises(NotASubsemigroupError):
        restrict(cyclic_group(3).carrier, [1])


def test_transpose_and_isomorphism(left_zero2):
    """Test that the dual of the left-zero band is the right-zero band, and bijection checks."""
    right_zero = transpose(left_zero2)

    assert right_zero.rows == ((0, 1), (0, 1))
    assert is_isomorphism(left_zero2, left_zero2, [1, 0])
    assert not is_isomorphism(left_zero2, right_zero, [0, 1])
    assert not is_isomorphism(left_zero2, right_zero, [0, 0])


def test_semigroup_equality_ignores_labels():
    """Test that labels are display-only."""
    assert FiniteSemigroup([[0]], ["x"]) == FiniteSemigroup([[0]])
    assert len({FiniteSemigroup([[0]], ["x"]), FiniteSemigroup([[0]])}) == 1
