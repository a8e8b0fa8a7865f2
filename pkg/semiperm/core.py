"""
This module contains the FiniteSemigroup type and elementary semigroup arithmetic.

Elements are the dense integer ids 0..n-1 and ``table[a][b]`` is the product ``a*b``
(row index is the left factor).
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ElementError, NonAssociativeError, NotASubsemigroupError, ShapeError


class FiniteSemigroup:
    """
    An immutable finite semigroup given by its Cayley table.

    The constructor trusts its input; use :func:`validate_table` for untrusted tables.
    """

    def __init__(self, table: Sequence[Sequence[int]] | np.ndarray, labels: Iterable[str] | None = None):
        array = np.array(table, dtype=np.int64)
        array.setflags(write=False)
        self._table = array
        self._rows: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in array.tolist())
        self.labels: tuple[str, ...] | None = tuple(labels) if labels is not None else None

    @property
    def table(self) -> np.ndarray:
        """Read-only n×n integer array of products."""
        return self._table

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """The table as nested tuples, for fast scalar lookups."""
        return self._rows

    @property
    def order(self) -> int:
        return len(self._rows)

    def mul(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def label(self, a: int) -> str:
        """Display name of an element."""
        return self.labels[a] if self.labels is not None else str(a)

    def elements(self) -> range:
        return range(len(self._rows))

    def __eq__(self, other: object) -> bool:
        # Labels are display-only
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __reduce__(self):
        return FiniteSemigroup, (self._rows, self.labels)

    def __repr__(self) -> str:
        return f"FiniteSemigroup(order={self.order}, table={[list(r) for r in self._rows]})"


class Adjoined(str, Enum):
    """Kind of element added by :func:`adjoin`."""

    IDENTITY = "identity"
    ZERO = "zero"


@dataclass(frozen=True)
class SpecialElements:
    """Distinguished elements of a semigroup."""

    zero: int | None
    identity: int | None
    idempotents: frozenset[int]
    left_identities: frozenset[int]
    right_identities: frozenset[int]


def associativity_witness(table: np.ndarray) -> tuple[int, int, int] | None:
    """
    Find the lexicographically first triple breaking associativity.

    Args:
        table: An n×n integer array with entries in [0, n)

    Returns:
        A triple (a, b, c) with (ab)c != a(bc), or None when the table is associative
    """
    left = table[table]  # [a, b, c] -> (ab)c
    right = table[:, table]  # [a, b, c] -> a(bc)
    bad = np.argwhere(left != right)
    if len(bad) == 0:
        return None
    a, b, c = (int(x) for x in bad[0])
    return (a, b, c)


def validate_table(order: int, raw_table: object, labels: Iterable[str] | None = None) -> FiniteSemigroup:
    """
    Validate a raw Cayley table and wrap it as a FiniteSemigroup.

    Args:
        order: The number of elements n
        raw_table: An n×n nested sequence or array of element ids
        labels: Optional display names, one per element

    Returns:
        The validated semigroup

    Raises:
        ShapeError: If the table is not n×n with integer entries in [0, n)
        NonAssociativeError: If some triple breaks associativity (exhaustive n³ scan)
    """
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise ShapeError(f"Order must be a positive integer, got {order!r}")

    try:
        array = np.asarray(raw_table)
    except (TypeError, ValueError) as err:
        raise ShapeError(f"Table is not a rectangular array: {err}") from err

    if array.shape != (order, order):
        raise ShapeError(f"Table must be {order}x{order}, got shape {array.shape}")
    if array.dtype == np.bool_ or not np.issubdtype(array.dtype, np.integer):
        raise ShapeError(f"Table entries must be integers, got {array.dtype}")
    if int(array.min()) < 0 or int(array.max()) >= order:
        raise ShapeError(f"Table entries must lie in [0, {order})")

    label_tuple = tuple(str(x) for x in labels) if labels is not None else None
    if label_tuple is not None and len(label_tuple) != order:
        raise ShapeError(f"Expected {order} labels, got {len(label_tuple)}")

    array = array.astype(np.int64)
    witness = associativity_witness(array)
    if witness is not None:
        raise NonAssociativeError(witness)

    return FiniteSemigroup(array, label_tuple)


def _check_element(S: FiniteSemigroup, a: int) -> None:
    if not 0 <= a < S.order:
        raise ElementError(f"Element {a} is outside [0, {S.order})")


def element_power(S: FiniteSemigroup, a: int, k: int) -> int:
    """
    Compute a^k by square-and-multiply.

    Raises:
        ElementError: If a is not an element or k < 1
    """
    _check_element(S, a)
    if k < 1:
        raise ElementError(f"Exponent must be at least 1, got {k}")

    result: int | None = None
    base = a
    while k:
        if k & 1:
            result = base if result is None else S.mul(result, base)
        base = S.mul(base, base)
        k >>= 1
    assert result is not None
    return result


def power_sequence(S: FiniteSemigroup, a: int) -> list[int]:
    """Return the distinct powers a, a^2, ... in order of first appearance (at most n of them)."""
    _check_element(S, a)
    seen: list[int] = []
    marks: set[int] = set()
    x = a
    while x not in marks:
        seen.append(x)
        marks.add(x)
        x = S.mul(x, a)
    return seen


def special_elements(S: FiniteSemigroup) -> SpecialElements:
    """Locate the zero, identity, idempotents and one-sided identities of S."""
    t = S.table
    ids = np.arange(S.order)

    left = frozenset(int(e) for e in np.flatnonzero((t == ids).all(axis=1)))
    right = frozenset(int(e) for e in np.flatnonzero((t == ids[:, None]).all(axis=0)))
    two_sided = left & right

    absorbs_right = (t == ids[:, None]).all(axis=1)  # z*s == z
    absorbs_left = (t == ids).all(axis=0)  # s*z == z
    zeros = np.flatnonzero(absorbs_right & absorbs_left)

    return SpecialElements(
        zero=int(zeros[0]) if len(zeros) else None,
        identity=min(two_sided) if two_sided else None,
        idempotents=frozenset(int(e) for e in np.flatnonzero(t[ids, ids] == ids)),
        left_identities=left,
        right_identities=right,
    )


def adjoin(S: FiniteSemigroup, kind: Adjoined | str) -> FiniteSemigroup:
    """
    Adjoin a new identity or zero as element n.

    The identity is adjoined unconditionally, even when S already is a monoid.
    """
    kind = Adjoined(kind)
    n = S.order
    t = np.empty((n + 1, n + 1), dtype=np.int64)
    t[:n, :n] = S.table
    if kind is Adjoined.IDENTITY:
        t[n, :] = np.arange(n + 1)
        t[:, n] = np.arange(n + 1)
        extra = "1"
    else:
        t[n, :] = n
        t[:, n] = n
        extra = "0"

    labels = (*S.labels, extra) if S.labels is not None else None
    return FiniteSemigroup(t, labels)


def generated_subsemigroup(S: FiniteSemigroup, gens: Iterable[int]) -> frozenset[int]:
    """
    Return the least subset containing gens that is closed under products.

    Raises:
        ElementError: If gens is empty or holds an invalid id
    """
    start = set(gens)
    if not start:
        raise ElementError("At least one generator is required")
    for g in start:
        _check_element(S, g)

    rows = S.rows
    closed = set(start)
    frontier = sorted(start)
    while frontier:
        found: set[int] = set()
        for x in frontier:
            for y in tuple(closed):
                for p in (rows[x][y], rows[y][x]):
                    if p not in closed:
                        found.add(p)
        closed |= found
        frontier = sorted(found)

    return frozenset(closed)


def is_monogenic(S: FiniteSemigroup) -> int | None:
    """Return the smallest element generating S, or None if S is not cyclic."""
    for a in S.elements():
        if len(power_sequence(S, a)) == S.order:
            return a
    return None


def set_product(S: FiniteSemigroup, left: Iterable[int], right: Iterable[int]) -> frozenset[int]:
    """Return the setwise product {xy : x in left, y in right}."""
    rows = S.rows
    right = tuple(right)
    return frozenset(rows[x][y] for x in left for y in right)


def is_semilattice(S: FiniteSemigroup) -> bool:
    """True when S is commutative and every element is idempotent."""
    t = S.table
    ids = np.arange(S.order)
    return bool((t == t.T).all() and (t[ids, ids] == ids).all())


def restrict(S: FiniteSemigroup, subset: Iterable[int]) -> tuple[FiniteSemigroup, tuple[int, ...]]:
    """
    Re-index a subsemigroup on 0..k-1.

    Args:
        S: The ambient semigroup
        subset: Element ids of a subsemigroup

    Returns:
        The subsemigroup and the sorted tuple of its members; position i holds the S-id of new element i

    Raises:
        NotASubsemigroupError: If the subset is empty or not closed
    """
    members = tuple(sorted(set(subset)))
    if not members:
        raise NotASubsemigroupError("A subsemigroup must be non-empty")
    position = {x: i for i, x in enumerate(members)}

    table = []
    for x in members:
        row = []
        for y in members:
            p = S.mul(x, y)
            if p not in position:
                raise NotASubsemigroupError(f"{x}*{y}={p} leaves the subset")
            row.append(position[p])
        table.append(row)

    labels = [S.labels[x] for x in members] if S.labels is not None else None
    return FiniteSemigroup(table, labels), members


def transpose(S: FiniteSemigroup) -> FiniteSemigroup:
    """Return the dual (anti-isomorphic) semigroup x*y := yx."""
    return FiniteSemigroup(S.table.T, S.labels)


def is_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup, bijection: Sequence[int]) -> bool:
    """Check cell by cell that bijection (S-id -> T-id) is an isomorphism from S onto T."""
    if S.order != T.order or len(bijection) != S.order:
        return False
    phi = np.asarray(bijection, dtype=np.int64)
    if sorted(phi.tolist()) != list(range(T.order)):
        return False
    return bool((phi[S.table] == T.table[phi[:, None], phi[None, :]]).all())
