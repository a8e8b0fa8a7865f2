"""
Tests for the enumeration module.
"""

import random
from itertools import permutations

import pytest

from semiperm.core import FiniteSemigroup, is_isomorphism, transpose
from semiperm.enumeration import (
    Mode,
    canonical_form,
    enumerate_associative,
    enumerate_up_to,
    prefixes,
    relabel,
)
from semiperm.errors import BoundExceededError

from .oracles import associative_tables_by_filter, count_column_major, is_associative


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 8), (3, 113)])
def test_labeled_counts(n, expected):
    """Test labeled counts against the brute-force filter."""
    tables = [S.rows for S in enumerate_associative(n)]

    assert len(tables) == expected
    # Verify no table is produced twice
    assert len(set(tables)) == expected
    assert set(tables) == associative_tables_by_filter(n)


@pytest.mark.slow
def test_labeled_count_order_4():
    """Test the order 4 count against a column-major enumerator."""
    count = sum(1 for _ in enumerate_associative(4))

    assert count == 3492
    assert count == count_column_major(4)


@pytest.mark.parametrize(
    "mode, expected",
    [(Mode.ISO, [1, 5, 24]), (Mode.ISOANTI, [1, 4, 18])],
)
def test_class_counts(mode, expected):
    """Test the number of classes up to isomorphism and anti-isomorphism."""
    assert [sum(1 for _ in enumerate_up_to(n, mode)) for n in (1, 2, 3)] == expected


@pytest.mark.slow
def test_class_counts_order_4():
    """Test the order 4 class counts."""
    assert sum(1 for _ in enumerate_up_to(4, Mode.ISO)) == 188
    assert sum(1 for _ in enumerate_up_to(4, "isoanti")) == 126


def test_streamed_tables_are_associative():
    """Test that every streamed table is associative."""
    assert all(is_associative(S.rows) for S in enumerate_associative(3))


def test_prefixes_partition_the_stream():
    """Test that running every prefix in turn reproduces the full stream."""
    full = list(enumerate_associative(3))
    for depth in (1, 3, 5):
        pieces = [S for prefix in prefixes(3, depth) for S in enumerate_associative(3, prefix=prefix)]
        assert pieces == full


def test_inconsistent_prefix():
    """Test that a prefix breaking associativity yields nothing."""
    # (0*0)*0 = 1*0 = 1 but 0*(0*0) = 0*1 = 0
    assert list(enumerate_associative(2, prefix=(1, 0, 1))) == []


def test_canonical_form_idempotent():
    """Test that canonical forms are fixed points."""
    for S in enumerate_associative(3):
        for mode in (Mode.ISO, Mode.ISOANTI):
            form = canonical_form(S, mode)
            assert canonical_form(form, mode) == form


def test_canonical_form_invariant_under_relabeling():
    """Test that relabeled tables share a canonical form and that equal forms come from isomorphic tables."""
    rng = random.Random(11)
    tables = list(enumerate_associative(3))
    for S in rng.sample(tables, 30):
        perm = list(range(3))
        rng.shuffle(perm)
        T = relabel(S, perm)
        assert is_isomorphism(S, T, perm)
        assert canonical_form(S) == canonical_form(T)

    # Verify equal forms come with an explicit bijection
    for S, T in (rng.sample(tables, 2) for _ in range(50)):
        same = canonical_form(S) == canonical_form(T)
        assert same == any(is_isomorphism(S, T, p) for p in permutations(range(3)))


def test_left_and_right_zero():
    """Test that left and right zero semigroups differ up to isomorphism but not up to anti-isomorphism."""
    left = FiniteSemigroup([[0, 0], [1, 1]])
    right = transpose(left)

    assert canonical_form(left, Mode.ISO) != canonical_form(right, Mode.ISO)
    assert canonical_form(left, Mode.ISOANTI) == canonical_form(right, Mode.ISOANTI)
    assert canonical_form(left, Mode.ISO) == canonical_form(relabel(left, [1, 0]), Mode.ISO)


def test_labeled_mode_keeps_table(chain3):
    """Test that labeled mode returns the table unchanged."""
    assert canonical_form(chain3, "labeled") is chain3


def test_bounds(chain3):
    """Test the order caps."""
    with pytest.raises(BoundExceededError):
        list(enumerate_associative(6))
    with pytest.raises(BoundExceededError):
        list(enumerate_associative(0))
    with pytest.raises(BoundExceededError):
        prefixes(6, 2)
    with pytest.raises(BoundExceededError):
        canonical_form(chain3, max_order=2)

    # Verify an explicit cap overrides the setting
    assert sum(1 for _ in enumerate_associative(2, max_order=2)) == 8
