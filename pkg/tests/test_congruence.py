"""
Tests for the congruence module.
"""

import pytest

from semiperm.config import configure
from semiperm.congruence import (
    Congruence,
    Partition,
    all_congruences,
    commutes,
    compose,
    congruence_closure,
    congruences_by_partition_filter,
    is_permutable,
    join,
    meet,
    quotient,
)
from semiperm.construction import cyclic_nilpotent
from semiperm.enumeration import enumerate_associative
from semiperm.errors import BoundExceededError, ElementError, SubjectMismatchError
from semiperm.groups import cyclic_group

from .oracles import bell_congruences


def test_closure_of_subgroup_pair(z4):
    """Test that collapsing 0 and 2 in Z4 gives the cosets of {0, 2}."""
    alpha = congruence_closure(z4.carrier, [(0, 2)])

    assert alpha.classes() == [(0, 2), (1, 3)]
    assert alpha.class_of == (0, 1, 0, 1)


def test_closure_of_nothing_is_identity(chain3):
    """Test that the empty pair set generates the identity relation."""
    assert congruence_closure(chain3, []).is_identity()


def test_closure_on_chain(chain3):
    """Test that min-compatibility forces nothing beyond the generating pair."""
    alpha = congruence_closure(chain3, [(2, 1)])

    assert alpha.classes() == [(0,), (1, 2)]


def test_closure_rejects_bad_pairs(chain3):
    """Test range checking of generating pairs."""
    with pytest.raises(ElementError):
        congruence_closure(chain3, [(0, 3)])


def test_closure_monotone_and_idempotent(z4):
    """Test that more pairs give a coarser congruence and that closing twice changes nothing."""
    small = congruence_closure(z4.carrier, [(0, 2)])
    large = congruence_closure(z4.carrier, [(0, 2), (0, 1)])

    assert small.refines(large)
    assert congruence_closure(z4.carrier, small.pairs()) == small


def test_all_congruences_examples(z2, chain2):
    """Test the lattices of a few tiny semigroups."""
    assert [c.class_of for c in all_congruences(z2.carrier)] == [(0, 1), (0, 0)]
    assert len(all_congruences(chain2)) == 2

    lattice = all_congruences(cyclic_nilpotent(3))
    assert [c.classes() for c in lattice] == [[(0,), (1,), (2,)], [(0,), (1, 2)], [(0, 1, 2)]]


def test_all_congruences_matches_partition_filter():
    """Test the closure-based lattice against the Bell-partition oracle on every table of order at most 3."""
    for n in range(1, 4):
        for S in enumerate_associative(n):
            expected = bell_congruences(S.rows)
            assert {c.class_of for c in all_congruences(S)} == expected
            assert {c.class_of for c in congruences_by_partition_filter(S)} == expected


@pytest.mark.slow
def test_all_congruences_matches_partition_filter_order_4():
    """Test the closure-based lattice against the partition filter on every table of order 4."""
    for S in enumerate_associative(4):
        assert all_congruences(S) == congruences_by_partition_filter(S)


def test_lattice_bound(z4):
    """Test that the lattice size cap is enforced, both by keyword and by setting."""
    with pytest.raises(BoundExceededError):
        all_congruences(z4.carrier, bound=2)

    configure(max_lattice_size=2)
    with pytest.raises(BoundExceededError):
        all_congruences(z4.carrier)


def test_compose_on_chain(chain3):
    """Test that (e2, e0) lies in α∘β but not in β∘α."""
    alpha = Congruence.from_blocks(3, [[2, 1]])
    beta = Congruence.from_blocks(3, [[1, 0]])

    assert (2, 0) in compose(alpha, beta)
    assert (2, 0) not in compose(beta, alpha)


def test_compose_with_identity(z4):
    """Test that composing with the identity gives the other relation back."""
    beta = congruence_closure(z4.carrier, [(0, 2)])

    assert compose(Congruence.identity(4), beta) == beta.pairs()
    assert compose(beta, Congruence.identity(4)) == beta.pairs()


def test_commutes(chain3):
    """Test commuting pairs, the chain witness, and subject mismatch."""
    alpha = Congruence.from_blocks(3, [[2, 1]])
    beta = Congruence.from_blocks(3, [[1, 0]])

    assert commutes(alpha, alpha)
    result = commutes(alpha, beta)
    assert not result
    assert result.witness == (2, 0)

    with pytest.raises(SubjectMismatchError):
        commutes(alpha, Congruence.identity(4))


def test_group_congruences_commute():
    """Test that any two congruences of Z6 commute."""
    lattice = all_congruences(cyclic_group(6).carrier)

    assert all(commutes(a, b) for a in lattice for b in lattice)


def test_commutes_iff_composition_is_join(chain3, null3):
    """Test that α∘β = β∘α exactly when α∘β equals the join."""
    for T in (chain3, null3, cyclic_nilpotent(3), cyclic_group(4).carrier):
        lattice = all_congruences(T)
        for a in lattice:
            for b in lattice:
                assert bool(commutes(a, b)) == (compose(a, b) == join(a, b).pairs())


def test_is_permutable_examples(chain3, null3):
    """Test the permutability verdict and witness orientation."""
    assert is_permutable(cyclic_group(6).carrier).permutable
    assert is_permutable(cyclic_nilpotent(4)).permutable
    assert not is_permutable(null3).permutable

    report = is_permutable(chain3)
    assert not report.permutable
    assert report.lattice_size == 4
    assert report.witness.pair == (2, 0)
    assert report.witness.alpha.classes() == [(0,), (1, 2)]
    assert report.witness.beta.classes() == [(0, 1), (2,)]
    assert report.witness.pair in compose(report.witness.alpha, report.witness.beta)
    assert report.witness.pair not in compose(report.witness.beta, report.witness.alpha)


def test_quotient(z4, chain3):
    """Test quotients by the identity, the universal relation and a subgroup congruence."""
    assert quotient(chain3, Congruence.identity(3)) == chain3
    assert quotient(chain3, Congruence.universal(3)).rows == ((0,),)

    Z2 = quotient(z4.carrier, congruence_closure(z4.carrier, [(0, 2)]))
    assert Z2 == cyclic_group(2).carrier


def test_meet_and_join(z4):
    """Test lattice operations on Z4."""
    alpha = congruence_closure(z4.carrier, [(0, 2)])

    assert meet(alpha, Congruence.universal(4)) == alpha
    assert join(alpha, Congruence.identity(4)) == alpha
    assert Partition(alpha.class_of).refines(Congruence.universal(4))
