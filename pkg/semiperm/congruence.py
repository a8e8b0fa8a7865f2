"""
This module computes congruences: closures of pair sets, the full congruence lattice,
relational composition, and the permutability decision.

The closure engine works on any set 0..n-1 together with a family of unary maps
("translations") that a congruence must respect. Semigroup congruences use the left and
right multiplications; G-set congruences (see ``gset``) use the action of each group element.
"""

import logging
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .config import get_settings
from .core import FiniteSemigroup
from .errors import BoundExceededError, ElementError, SubjectMismatchError
from .unionfind import UnionFind

logger = logging.getLogger(__name__)

Translations = Sequence[Sequence[int]]


@dataclass(frozen=True)
class Partition:
    """
    An equivalence on 0..n-1 in canonical form: class_of[a] is the smallest member of a's class.
    """

    class_of: tuple[int, ...]

    @classmethod
    def from_blocks(cls, order: int, blocks: Iterable[Iterable[int]]):
        """Build the canonical partition whose classes are the given blocks (missing points stay single)."""
        uf = UnionFind(order)
        for block in blocks:
            block = list(block)
            for x in block[1:]:
                uf.union(block[0], x)
        return cls(uf.canonical())

    @classmethod
    def identity(cls, order: int):
        return cls(tuple(range(order)))

    @classmethod
    def universal(cls, order: int):
        return cls((0,) * order)

    @property
    def subject_order(self) -> int:
        return len(self.class_of)

    @property
    def num_classes(self) -> int:
        return len(set(self.class_of))

    def classes(self) -> list[tuple[int, ...]]:
        """The classes as sorted tuples, ordered by representative."""
        blocks: dict[int, list[int]] = {}
        for x, rep in enumerate(self.class_of):
            blocks.setdefault(rep, []).append(x)
        return [tuple(blocks[rep]) for rep in sorted(blocks)]

    def class_members(self, a: int) -> tuple[int, ...]:
        rep = self.class_of[a]
        return tuple(x for x, r in enumerate(self.class_of) if r == rep)

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def is_identity(self) -> bool:
        return self.class_of == tuple(range(len(self.class_of)))

    def is_universal(self) -> bool:
        return all(rep == 0 for rep in self.class_of)

    def refines(self, other: "Partition") -> bool:
        """True when every class of self lies inside a class of other."""
        _same_subject(self, other)
        return all(other.class_of[a] == other.class_of[rep] for a, rep in enumerate(self.class_of))

    def pairs(self) -> frozenset[tuple[int, int]]:
        """The relation as a set of element pairs."""
        return frozenset((a, b) for block in self.classes() for a in block for b in block)


class Congruence(Partition):
    """A congruence of a finite semigroup, stored as its canonical class vector."""


@dataclass(frozen=True, eq=False)
class Composition:
    """
    The relation left∘right, kept on class representatives.

    (a, b) belongs to it iff the left-class of a meets the right-class of b, i.e. iff
    (left_of[a], right_of[b]) is one of the links.
    """

    left_of: tuple[int, ...]
    right_of: tuple[int, ...]
    links: frozenset[tuple[int, int]]

    def __contains__(self, pair: object) -> bool:
        a, b = pair  # type: ignore[misc]
        return (self.left_of[a], self.right_of[b]) in self.links

    def pairs(self) -> frozenset[tuple[int, int]]:
        n = len(self.left_of)
        return frozenset((a, b) for a in range(n) for b in range(n) if (a, b) in self)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.pairs()))

    def __len__(self) -> int:
        return len(self.pairs())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Composition):
            return self.pairs() == other.pairs()
        if isinstance(other, (set, frozenset)):
            return self.pairs() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.pairs())


@dataclass(frozen=True)
class CommuteResult:
    """Outcome of comparing α∘β with β∘α; witness lies in α∘β but not in β∘α."""

    commutes: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.commutes


@dataclass(frozen=True)
class PermutabilityWitness:
    alpha: Congruence
    beta: Congruence
    pair: tuple[int, int]


@dataclass(frozen=True)
class PermutabilityReport:
    permutable: bool
    witness: PermutabilityWitness | None
    lattice_size: int


def _same_subject(left: Partition, right: Partition) -> None:
    if left.subject_order != right.subject_order:
        raise SubjectMismatchError(
            f"Congruences live on different sets ({left.subject_order} vs {right.subject_order} elements)"
        )


# -- generic engine -----------------------------------------------------------


def close_partition(order: int, pairs: Iterable[tuple[int, int]], translations: Translations) -> tuple[int, ...]:
    """
    Least equivalence containing pairs and respecting every translation.

    Union-find over the points with a worklist of merged pairs: whenever (a, b) merges two
    classes, (m[a], m[b]) is queued for each translation m.
    """
    uf = UnionFind(order)
    queue = deque(pairs)
    while queue:
        a, b = queue.popleft()
        if uf.union(a, b):
            for m in translations:
                queue.append((m[a], m[b]))
    return uf.canonical()


def join_partitions(*vectors: Sequence[int]) -> tuple[int, ...]:
    """Equivalence join; joins of congruences are again congruences."""
    uf = UnionFind(len(vectors[0]))
    for vector in vectors:
        for x, rep in enumerate(vector):
            uf.union(x, rep)
    return uf.canonical()


def meet_partitions(left: Sequence[int], right: Sequence[int]) -> tuple[int, ...]:
    """Intersection of two equivalences."""
    smallest: dict[tuple[int, int], int] = {}
    return tuple(smallest.setdefault((left[x], right[x]), x) for x in range(len(left)))


def _lattice_key(vector: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (-len(set(vector)), vector)


def enumerate_partition_lattice(order: int, translations: Translations, bound: int) -> list[tuple[int, ...]]:
    """
    All partitions compatible with the translations.

    Every compatible partition is the join of the principal ones it contains, so the
    identity together with all principal closures, closed under joins, is the whole lattice.

    Raises:
        BoundExceededError: If more than bound partitions turn up
    """
    identity = tuple(range(order))
    principals = sorted({close_partition(order, [(a, b)], translations) for a, b in combinations(range(order), 2)})
    logger.debug("%d distinct principal congruences on %d points", len(principals), order)

    found = {identity, *principals}
    if len(found) > bound:
        raise BoundExceededError(f"Congruence lattice exceeds {bound} elements")

    frontier = list(principals)
    while frontier:
        fresh = []
        for vector in frontier:
            for principal in principals:
                joined = join_partitions(vector, principal)
                if joined not in found:
                    found.add(joined)
                    fresh.append(joined)
                    if len(found) > bound:
                        raise BoundExceededError(f"Congruence lattice exceeds {bound} elements")
        frontier = fresh

    logger.debug("Congruence lattice on %d points has %d elements", order, len(found))
    return sorted(found, key=_lattice_key)


def composition_links(left: Sequence[int], right: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Pairs (left-class, right-class) of classes that intersect."""
    return frozenset(zip(left, right, strict=True))


def partitions_commute(left: Sequence[int], right: Sequence[int]) -> bool:
    """
    Decide left∘right == right∘left without materializing element pairs.

    For cells (p, q) and (r, s) of the meet, the pair of their elements lies in left∘right
    iff (p, s) is a cell, and in right∘left iff (r, q) is a cell.
    """
    cells = composition_links(left, right)
    for p, q in cells:
        for r, s in cells:
            if ((p, s) in cells) != ((r, q) in cells):
                return False
    return True


def commute_witness(left: Sequence[int], right: Sequence[int]) -> tuple[int, int] | None:
    """Smallest pair in left∘right but not in right∘left, or None when they commute."""
    if partitions_commute(left, right):
        return None
    forward = composition_links(left, right)
    backward = composition_links(right, left)
    n = len(left)
    for a in range(n):
        for b in range(n):
            if (left[a], right[b]) in forward and (right[a], left[b]) not in backward:
                return (a, b)
    return None


def is_compatible_partition(table: np.ndarray, class_of: Sequence[int]) -> bool:
    """Two-sided compatibility test of a canonical class vector against a Cayley table."""
    c = np.asarray(class_of, dtype=np.int64)
    products = c[table]
    return bool((products == c[table[c, :]]).all() and (products == c[table[:, c]]).all())


# -- semigroup congruences ----------------------------------------------------


def translations(S: FiniteSemigroup) -> list[tuple[int, ...]]:
    """Left and right multiplication maps of S, duplicates removed."""
    maps = {tuple(row) for row in S.rows}  # x -> s*x
    maps |= {tuple(int(v) for v in S.table[:, s]) for s in S.elements()}  # x -> x*s
    return sorted(maps)


def congruence_closure(S: FiniteSemigroup, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """
    Least congruence of S containing the given pairs.

    Raises:
        ElementError: If a pair mentions an invalid element
    """
    pairs = list(pairs)
    for a, b in pairs:
        if not (0 <= a < S.order and 0 <= b < S.order):
            raise ElementError(f"Pair ({a}, {b}) is outside [0, {S.order})")
    return Congruence(close_partition(S.order, pairs, translations(S)))


def all_congruences(S: FiniteSemigroup, *, bound: int | None = None) -> list[Congruence]:
    """
    The complete congruence lattice of S, identity first and universal last.

    Raises:
        BoundExceededError: If the lattice has more than bound elements
    """
    if bound is None:
        bound = get_settings().max_lattice_size
    return [Congruence(v) for v in enumerate_partition_lattice(S.order, translations(S), bound)]


def join(alpha: Partition, beta: Partition) -> Congruence:
    """Lattice join of two congruences."""
    _same_subject(alpha, beta)
    return Congruence(join_partitions(alpha.class_of, beta.class_of))


def meet(alpha: Partition, beta: Partition) -> Congruence:
    """Lattice meet (intersection) of two congruences."""
    _same_subject(alpha, beta)
    return Congruence(meet_partitions(alpha.class_of, beta.class_of))


def compose(alpha: Partition, beta: Partition) -> Composition:
    """
    The relation α∘β = {(a, b) : a α x and x β b for some x}.

    Raises:
        SubjectMismatchError: If the congruences live on different sets
    """
    _same_subject(alpha, beta)
    return Composition(alpha.class_of, beta.class_of, composition_links(alpha.class_of, beta.class_of))


def commutes(alpha: Partition, beta: Partition) -> CommuteResult:
    """
    Decide whether α∘β = β∘α.

    Raises:
        SubjectMismatchError: If the congruences live on different sets
    """
    _same_subject(alpha, beta)
    witness = commute_witness(alpha.class_of, beta.class_of)
    return CommuteResult(commutes=witness is None, witness=witness)


def is_permutable(S: FiniteSemigroup, *, bound: int | None = None) -> PermutabilityReport:
    """
    Decide whether every two congruences of S commute.

    Pairs are visited as (lattice[j], lattice[i]) for i < j in lattice order, and the first
    failing pair is reported with a witness from α∘β minus β∘α.
    """
    lattice = all_congruences(S, bound=bound)
    for j in range(len(lattice)):
        for i in range(j):
            alpha, beta = lattice[j], lattice[i]
            if partitions_commute(alpha.class_of, beta.class_of):
                continue
            pair = commute_witness(alpha.class_of, beta.class_of)
            assert pair is not None
            return PermutabilityReport(False, PermutabilityWitness(alpha, beta, pair), len(lattice))

    return PermutabilityReport(True, None, len(lattice))


def quotient(S: FiniteSemigroup, alpha: Partition) -> FiniteSemigroup:
    """
    The quotient semigroup S/α, its elements indexed by sorted class representatives.

    Raises:
        SubjectMismatchError: If α lives on a set of another size
    """
    if alpha.subject_order != S.order:
        raise SubjectMismatchError(f"Congruence on {alpha.subject_order} elements, semigroup has {S.order}")

    reps = sorted(set(alpha.class_of))
    index = {rep: i for i, rep in enumerate(reps)}
    table = [[index[alpha.class_of[S.mul(x, y)]] for y in reps] for x in reps]
    labels = [S.labels[rep] for rep in reps] if S.labels is not None else None
    return FiniteSemigroup(table, labels)


def _restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of 0..n-1 as restricted growth strings."""

    def extend(prefix: list[int], top: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for block in range(top + 2):
            prefix.append(block)
            yield from extend(prefix, max(top, block))
            prefix.pop()

    yield from extend([0], 0)


def congruences_by_partition_filter(S: FiniteSemigroup) -> list[Congruence]:
    """
    Brute-force congruence lattice: filter all Bell(n) partitions for compatibility.

    Raises:
        BoundExceededError: For n > 10
    """
    if S.order > 10:
        raise BoundExceededError("Partition filter is limited to order 10")

    found = []
    for blocks in _restricted_growth_strings(S.order):
        first: dict[int, int] = {}
        vector = tuple(first.setdefault(b, x) for x, b in enumerate(blocks))
        if is_compatible_partition(S.table, vector):
            found.append(vector)
    return [Congruence(v) for v in sorted(found, key=_lattice_key)]
