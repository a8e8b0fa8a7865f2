"""
This module enumerates associative Cayley tables of small order and reduces them to
canonical forms up to isomorphism, optionally also up to anti-isomorphism.
"""

import logging
from collections.abc import Iterator, Sequence
from enum import Enum
from itertools import permutations

import numpy as np

from .config import get_settings
from .core import FiniteSemigroup
from .errors import BoundExceededError

logger = logging.getLogger(__name__)

UNSET = -1


class Mode(str, Enum):
    """What a census counts as the same table."""

    LABELED = "labeled"
    ISO = "iso"
    ISOANTI = "isoanti"


def _check_order(n: int, max_order: int | None) -> None:
    bound = max_order or get_settings().max_census_order
    if n < 1:
        raise BoundExceededError(f"Order must be positive, got {n}")
    if n > bound:
        raise BoundExceededError(f"Exhaustive enumeration is limited to order {bound}, got {n}")


def _consistent(t: list[int], n: int, i: int, j: int) -> bool:
    """
    Check every triple that the cell (i, j) just completed.

    A triple (a, b, c) reads the cells ab, (ab)c, bc and a(bc); whichever of them was filled
    last is (i, j) in one of these four roles.
    """
    v = t[i * n + j]

    # (a, b) = (i, j)
    for c in range(n):
        left, bc = t[v * n + c], t[j * n + c]
        if left != UNSET and bc != UNSET:
            right = t[i * n + bc]
            if right != UNSET and left != right:
                return False

    # (b, c) = (i, j)
    for a in range(n):
        right, ab = t[a * n + v], t[a * n + i]
        if right != UNSET and ab != UNSET:
            left = t[ab * n + j]
            if left != UNSET and left != right:
                return False

    for a in range(n):
        for b in range(n):
            # Outer cell on the left: ab = i and c = j
            if t[a * n + b] == i:
                bc = t[b * n + j]
                if bc != UNSET:
                    right = t[a * n + bc]
                    if right != UNSET and right != v:
                        return False
            # Outer cell on the right: a = i and (a, b) here plays bc = j
            if t[a * n + b] == j:
                ia = t[i * n + a]
                if ia != UNSET:
                    left = t[ia * n + b]
                    if left != UNSET and left != v:
                        return False
    return True


def _extend(t: list[int], n: int, k: int, stop: int) -> Iterator[list[int]]:
    if k == stop:
        yield t
        return
    i, j = divmod(k, n)
    for v in range(n):
        t[k] = v
        if _consistent(t, n, i, j):
            yield from _extend(t, n, k + 1, stop)
    t[k] = UNSET


def prefixes(n: int, depth: int, *, max_order: int | None = None) -> list[tuple[int, ...]]:
    """
    All consistent fillings of the first depth cells in row-major order, in search order.

    Running :func:`enumerate_associative` on each of them in turn yields exactly the full stream.
    """
    _check_order(n, max_order)
    depth = min(depth, n * n)
    return [tuple(t[:depth]) for t in _extend([UNSET] * (n * n), n, 0, depth)]


def enumerate_associative(
    n: int, *, prefix: Sequence[int] = (), max_order: int | None = None
) -> Iterator[FiniteSemigroup]:
    """
    Yield every associative n×n table exactly once.

    Cells are filled row by row with backtracking; each placed cell is checked against every
    triple it completes.

    Args:
        n: The order
        prefix: Fixed values for the first cells, as produced by :func:`prefixes`
        max_order: Override for the max_census_order setting

    Raises:
        BoundExceededError: If n exceeds the enumeration cap
    """
    _check_order(n, max_order)
    t = [UNSET] * (n * n)
    for k, v in enumerate(prefix):
        t[k] = v
        if not _consistent(t, n, *divmod(k, n)):
            return

    for filled in _extend(t, n, len(prefix), n * n):
        yield FiniteSemigroup([filled[r * n : (r + 1) * n] for r in range(n)])


def _all_relabelings(table: np.ndarray) -> np.ndarray:
    """Every relabeled table, flattened; row k uses the k-th permutation of range(n)."""
    n = table.shape[0]
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    inverse = np.argsort(perms, axis=1)
    # relabeled[k][u][v] = p[t[q[u]][q[v]]] with p = perms[k], q its inverse
    inner = table[inverse[:, :, None], inverse[:, None, :]]
    relabeled = np.take_along_axis(perms, inner.reshape(len(perms), -1), axis=1)
    return relabeled


def _least(flat: np.ndarray) -> np.ndarray:
    order = np.lexsort(flat.T[::-1])
    return flat[order[0]]


def canonical_form(
    S: FiniteSemigroup, mode: Mode | str = Mode.ISO, *, max_order: int | None = None
) -> FiniteSemigroup:
    """
    The lexicographically least table among all relabelings of S (and of its transpose in
    ``isoanti`` mode). ``labeled`` mode returns S as it is.

    Raises:
        BoundExceededError: If S is larger than the max_canonical_order setting
    """
    mode = Mode(mode)
    if mode is Mode.LABELED:
        return S

    bound = max_order or get_settings().max_canonical_order
    if S.order > bound:
        raise BoundExceededError(f"Canonical forms are limited to order {bound}, got {S.order}")

    candidates = _all_relabelings(S.table)
    if mode is Mode.ISOANTI:
        candidates = np.concatenate((candidates, _all_relabelings(np.ascontiguousarray(S.table.T))))
    best = _least(candidates)
    return FiniteSemigroup(best.reshape(S.order, S.order))


def relabel(S: FiniteSemigroup, perm: Sequence[int]) -> FiniteSemigroup:
    """The table with element x renamed perm[x]."""
    p = np.asarray(perm, dtype=np.int64)
    q = np.argsort(p)
    return FiniteSemigroup(p[S.table[q[:, None], q[None, :]]])


def enumerate_up_to(
    n: int, mode: Mode | str = Mode.LABELED, *, max_order: int | None = None
) -> Iterator[FiniteSemigroup]:
    """
    Stream the tables of order n: all of them in ``labeled`` mode, otherwise one canonical
    form per class in order of first appearance.
    """
    mode = Mode(mode)
    seen: set[FiniteSemigroup] = set()
    for S in enumerate_associative(n, max_order=max_order):
        if mode is Mode.LABELED:
            yield S
            continue
        form = canonical_form(S, mode)
        if form not in seen:
            seen.add(form)
            yield form
    logger.debug("Order %d, mode %s: %d classes", n, mode.value, len(seen))
