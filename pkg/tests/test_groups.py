"""
Tests for the groups module.
"""

import pytest

from semiperm.config import configure
from semiperm.errors import BoundExceededError, NotAGroupError, NotASubgroupError
from semiperm.groups import (
    Subgroup,
    all_subgroups,
    alternating_group,
    as_group,
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    direct_product,
    dual,
    elementary_abelian_group,
    generated_subgroup,
    interval_above,
    is_subgroup,
    product_commutes,
    quaternion_group,
    right_cosets,
    small_groups,
    subgroup,
    symmetric_group,
)

from .oracles import subgroups_by_subsets


def test_as_group(z4, chain2):
    """Test identity and inverses of Z4 and the rejection of a semilattice."""
    G = as_group(z4.carrier)

    assert G.identity == 0
    assert [G.inv(a) for a in G.elements()] == [0, 3, 2, 1]

    with pytest.raises(NotAGroupError) as excinfo:
        as_group(chain2)
    assert "inverse" in excinfo.value.reason


def test_as_group_without_identity(band22):
    """Test that a band without identity is not a group."""
    with pytest.raises(NotAGroupError) as excinfo:
        as_group(band22)
    assert excinfo.value.reason == "no identity"


def test_named_groups():
    """Test orders and commutativity of the catalog."""
    assert symmetric_group(3).order == 6
    assert not symmetric_group(3).is_abelian()
    assert dihedral_group(4).order == 8
    assert not dihedral_group(4).is_abelian()
    assert quaternion_group().order == 8
    assert not quaternion_group().is_abelian()
    assert elementary_abelian_group(2, 3).is_abelian()
    assert [G.order for G in small_groups(8)] == sorted(G.order for G in small_groups(8))
    assert len(small_groups(8)) == 14
    assert len(small_groups(4)) == 5
    assert len(small_groups(12)) == 24
    assert [G.order for G in small_groups(12)].count(12) == 5

    A4 = alternating_group(4)
    assert A4.order == 12
    # A4 has no subgroup of order 6
    assert all(len(H) != 6 for H in all_subgroups(A4))

    Dic3 = dicyclic_group(3)
    assert Dic3.order == 12
    assert not Dic3.is_abelian()
    # x² = r³ is the only involution
    assert sum(1 for a in Dic3.elements() if a != Dic3.identity and Dic3.mul(a, a) == Dic3.identity) == 1


def test_subgroup_validation():
    """Test subgroup checks."""
    S3 = symmetric_group(3)

    assert subgroup(S3, [0]).members == (0,)
    with pytest.raises(NotASubgroupError):
        subgroup(S3, [1])
    with pytest.raises(NotASubgroupError):
        subgroup(S3, [0, 9])


@pytest.mark.parametrize(
    "G, expected",
    [
        (cyclic_group(6), 4),
        (cyclic_group(8), 4),
        (elementary_abelian_group(2, 2), 5),
        (symmetric_group(3), 6),
        (dihedral_group(4), 10),
        (quaternion_group(), 6),
        (direct_product(cyclic_group(2), cyclic_group(4)), 8),
        (elementary_abelian_group(2, 3), 16),
        (cyclic_group(9), 3),
        (elementary_abelian_group(3, 2), 6),
        (dihedral_group(5), 8),
        (cyclic_group(12), 6),
        (direct_product(cyclic_group(2), cyclic_group(6)), 10),
        (dihedral_group(6), 16),
        (alternating_group(4), 10),
        (dicyclic_group(3), 8),
    ],
    ids=lambda value: getattr(value, "name", str(value)),
)
def test_all_subgroups_against_subset_oracle(G, expected):
    """Test subgroup counts and members against closure of every subset."""
    found = all_subgroups(G)

    assert len(found) == expected
    assert {H.members for H in found} == subgroups_by_subsets(G.carrier.rows, G.identity)
    assert found[0] == Subgroup((G.identity,))
    assert found[-1] == Subgroup(tuple(G.elements()))


def test_subgroup_bound():
    """Test the group order cap."""
    configure(max_group_order=4)
    with pytest.raises(BoundExceededError):
        all_subgroups(symmetric_group(3))
    assert len(all_subgroups(symmetric_group(3), bound=6)) == 6


def test_interval_above():
    """Test the subgroups between A3 and S3."""
    S3 = symmetric_group(3)
    A3 = generated_subgroup(S3, [3])

    assert len(A3) == 3
    assert interval_above(S3, A3) == [A3, Subgroup(tuple(range(6)))]
    assert len(interval_above(S3, Subgroup((0,)))) == 6


def test_product_commutes():
    """Test HK = KH for normal subgroups and its failure for two reflections in S3."""
    S3 = symmetric_group(3)
    reflections = [H for H in all_subgroups(S3) if len(H) == 2]
    A3 = next(H for H in all_subgroups(S3) if len(H) == 3)

    assert product_commutes(S3, reflections[0], A3).commutes
    result = product_commutes(S3, reflections[0], reflections[1])
    assert not result.commutes
    assert result.hk != result.kh


def test_right_cosets():
    """Test the right cosets of a subgroup of Z4."""
    Z4 = cyclic_group(4)

    assert right_cosets(Z4, Subgroup((0, 2))) == [(0, 2), (1, 3)]
    assert len(right_cosets(symmetric_group(3), Subgroup((0,)))) == 6


def test_dual_and_direct_product():
    """Test x*y := yx and the pair encoding of direct products."""
    S3 = symmetric_group(3)
    D = dual(S3)

    assert all(D.mul(a, b) == S3.mul(b, a) for a in S3.elements() for b in S3.elements())
    assert D.identity == S3.identity

    P = direct_product(cyclic_group(2), cyclic_group(3))
    assert P.order == 6
    assert P.is_abelian()
    # (1, 2) * (1, 2) = (0, 1)
    assert P.mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1
    assert P.inv(1 * 3 + 1) == 1 * 3 + 2


@pytest.mark.parametrize("G", small_groups(12), ids=lambda G: G.name)
def test_product_commutes_iff_subgroup(G):
    """Test that HK = KH exactly when HK is a subgroup."""
    subgroups = all_subgroups(G)
    for H in subgroups:
        for K in subgroups:
            result = product_commutes(G, H, K)
            assert result.commutes == is_subgroup(G, result.hk)
