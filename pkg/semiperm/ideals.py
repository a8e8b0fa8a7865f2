"""
This module provides ideals, Green's relations, the kernel, Rees quotients and the
nil / nilpotent / archimedean / completely simple predicates.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .config import get_settings
from .congruence import Partition, meet_partitions
from .core import FiniteSemigroup, power_sequence, set_product, special_elements
from .errors import NotAnIdealError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealSet:
    """A two-sided ideal of a semigroup of the given order."""

    members: frozenset[int]
    subject_order: int

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def issubset(self, other: "IdealSet") -> bool:
        return self.members <= other.members

    def __contains__(self, a: object) -> bool:
        return a in self.members

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class IdealLattice:
    ideals: tuple[IdealSet, ...]
    is_chain: bool


@dataclass(frozen=True)
class GreenStructure:
    """Green's R, L, J and H relations as canonical partitions."""

    R: Partition
    L: Partition
    J: Partition
    H: Partition


@dataclass(frozen=True)
class NilpotencyProfile:
    """
    Nil / nilpotent data. layers is the chain S, S², ... up to the first repeated power;
    for a nilpotent semigroup it ends with {0} and its length is the degree.
    """

    has_zero: bool
    is_nil: bool
    is_nilpotent: bool
    degree: int | None
    layers: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class SimplicityFlags:
    is_simple: bool
    is_completely_simple: bool


def _sbs(S: FiniteSemigroup, b: int) -> frozenset[int]:
    t = S.table
    return frozenset(np.unique(t[t[:, b], :]).tolist())


def principal_ideal(S: FiniteSemigroup, a: int) -> IdealSet:
    """The ideal S¹aS¹, computed as {a} ∪ Sa ∪ aS ∪ SaS."""
    t = S.table
    left = t[:, a]
    parts = np.concatenate(([a], left, t[a, :], t[left, :].ravel()))
    return IdealSet(frozenset(np.unique(parts).tolist()), S.order)


def is_ideal(S: FiniteSemigroup, members: Iterable[int]) -> bool:
    """True when members is a non-empty two-sided ideal of S."""
    members = frozenset(members)
    if not members:
        return False
    everything = range(S.order)
    return set_product(S, everything, members) <= members and set_product(S, members, everything) <= members


def all_ideals(S: FiniteSemigroup) -> IdealLattice:
    """
    Every two-sided ideal, as unions of principal ideals, ordered by (size, members).
    """
    principals = {principal_ideal(S, a).members for a in S.elements()}
    found = set(principals)
    frontier = list(principals)
    while frontier:
        fresh = []
        for ideal in frontier:
            for principal in principals:
                union = ideal | principal
                if union not in found:
                    found.add(union)
                    fresh.append(union)
        frontier = fresh

    ordered = sorted(found, key=lambda m: (len(m), sorted(m)))
    is_chain = all(ordered[i] <= ordered[i + 1] for i in range(len(ordered) - 1))
    return IdealLattice(tuple(IdealSet(m, S.order) for m in ordered), is_chain)


def _partition_by(keys: list) -> Partition:
    first: dict = {}
    return Partition(tuple(first.setdefault(key, x) for x, key in enumerate(keys)))


def green(S: FiniteSemigroup) -> GreenStructure:
    """Green's relations compared through principal one-sided and two-sided ideals."""
    t = S.table
    right_ideals = [frozenset(t[a, :].tolist()) | {a} for a in S.elements()]
    left_ideals = [frozenset(t[:, a].tolist()) | {a} for a in S.elements()]
    two_sided = [principal_ideal(S, a).members for a in S.elements()]

    R = _partition_by(right_ideals)
    L = _partition_by(left_ideals)
    J = _partition_by(two_sided)
    H = Partition(meet_partitions(R.class_of, L.class_of))
    return GreenStructure(R=R, L=L, J=J, H=H)


def kernel(S: FiniteSemigroup) -> IdealSet:
    """The minimum ideal: the smallest principal ideal (every minimal principal ideal is the kernel)."""
    return min((principal_ideal(S, a) for a in S.elements()), key=lambda ideal: len(ideal))


def rees_quotient(S: FiniteSemigroup, ideal: IdealSet | Iterable[int]) -> FiniteSemigroup:
    """
    Collapse an ideal to a single zero, placed after the surviving elements.

    Raises:
        NotAnIdealError: If the subset is not a two-sided ideal
    """
    members = ideal.members if isinstance(ideal, IdealSet) else frozenset(ideal)
    if not is_ideal(S, members):
        raise NotAnIdealError(f"{sorted(members)} is not an ideal")

    outside = [x for x in S.elements() if x not in members]
    zero = len(outside)
    index = {x: i for i, x in enumerate(outside)}

    def image(p: int) -> int:
        return zero if p in members else index[p]

    table = [[image(S.mul(x, y)) for y in outside] + [zero] for x in outside]
    table.append([zero] * (zero + 1))
    labels = [S.labels[x] for x in outside] + ["0"] if S.labels is not None else None
    return FiniteSemigroup(table, labels)


def nilpotency_profile(S: FiniteSemigroup) -> NilpotencyProfile:
    """Decide nil and nilpotent; the layers are the powers S, S², ... until they stabilize."""
    zero = special_elements(S).zero
    everything = range(S.order)

    layers = [frozenset(everything)]
    while True:
        following = set_product(S, layers[-1], everything)
        if following == layers[-1]:
            break
        layers.append(following)

    is_nil = zero is not None and all(zero in power_sequence(S, a) for a in everything)
    is_nilpotent = zero is not None and layers[-1] == {zero}
    return NilpotencyProfile(
        has_zero=zero is not None,
        is_nil=is_nil,
        is_nilpotent=is_nilpotent,
        degree=len(layers) if is_nilpotent else None,
        layers=tuple(layers),
    )


def is_archimedean(S: FiniteSemigroup, *, with_identity: bool | None = None) -> bool:
    """
    True when, for all a and b, some power of a lies in SbS.

    Args:
        S: The semigroup
        with_identity: Use S¹bS¹ instead of SbS; defaults to the archimedean_with_identity setting
    """
    if with_identity is None:
        with_identity = get_settings().archimedean_with_identity

    powers = [power_sequence(S, a) for a in S.elements()]
    for b in S.elements():
        target = principal_ideal(S, b).members if with_identity else _sbs(S, b)
        for seq in powers:
            if not any(p in target for p in seq):
                return False
    return True


def simplicity_flags(S: FiniteSemigroup) -> SimplicityFlags:
    """A finite simple semigroup is completely simple; the idempotent check confirms it."""
    is_simple = all(len(principal_ideal(S, a)) == S.order for a in S.elements())
    has_idempotent = bool(special_elements(S).idempotents)
    return SimplicityFlags(is_simple=is_simple, is_completely_simple=is_simple and has_idempotent)
