"""
This module provides right G-sets: orbits, stabilizers, G-set congruences, and the
correspondence between the congruences of a transitive G-set and the subgroups above a
point stabilizer.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .config import get_settings
from .congruence import Partition, enumerate_partition_lattice, partitions_commute
from .core import FiniteSemigroup, restrict
from .errors import BoundExceededError, InvalidActionError, NotTransitiveError, StabilizerNotContainedError
from .groups import FiniteGroup, Subgroup, as_group, direct_product, dual, product_commutes, right_cosets, subgroup
from .unionfind import UnionFind

logger = logging.getLogger(__name__)


class GSetCongruence(Partition):
    """An action-compatible partition of the points of a G-set."""


@dataclass(frozen=True)
class Lemma17Check:
    """Both sides of the commutation criterion, computed independently."""

    congruences_commute: bool
    subgroups_commute: bool


class GSet:
    """
    A right action of a finite group on the points 0..m-1; action[x][g] is x·g.

    Raises:
        InvalidActionError: If the table is malformed or violates x·e = x and (x·g)·h = x·(gh)
    """

    def __init__(self, group: FiniteGroup, action: Sequence[Sequence[int]]):
        self.group = group
        self.action = tuple(tuple(int(v) for v in row) for row in action)
        self._validate()

    def _validate(self) -> None:
        G, m = self.group, len(self.action)
        if m == 0:
            raise InvalidActionError("A G-set needs at least one point")
        for x, row in enumerate(self.action):
            if len(row) != G.order:
                raise InvalidActionError(f"Point {x} has {len(row)} images, expected {G.order}")
            if any(not 0 <= y < m for y in row):
                raise InvalidActionError(f"Point {x} is moved outside [0, {m})")
            if row[G.identity] != x:
                raise InvalidActionError(f"Identity moves point {x}")
        for x in range(m):
            for g in G.elements():
                xg = self.action[x][g]
                for h in G.elements():
                    if self.action[xg][h] != self.action[x][G.mul(g, h)]:
                        raise InvalidActionError(f"(x·g)·h != x·(gh) for x={x}, g={g}, h={h}")

    @property
    def points(self) -> int:
        return len(self.action)

    def act(self, x: int, g: int) -> int:
        return self.action[x][g]

    def translations(self) -> list[tuple[int, ...]]:
        """One point map per group element, duplicates removed."""
        return sorted({tuple(self.action[x][g] for x in range(self.points)) for g in self.group.elements()})


def coset_space(G: FiniteGroup, H: Subgroup) -> GSet:
    """G acting on the right cosets Hg (indexed by smallest member) by right translation."""
    cosets = right_cosets(G, subgroup(G, H.members))
    coset_of = {g: i for i, coset in enumerate(cosets) for g in coset}
    return GSet(G, [[coset_of[G.mul(coset[0], g)] for g in G.elements()] for coset in cosets])


def regular_action(G: FiniteGroup) -> GSet:
    """G acting on itself by right multiplication."""
    return GSet(G, [[G.mul(x, g) for g in G.elements()] for x in G.elements()])


def trivial_action(G: FiniteGroup, m: int) -> GSet:
    return GSet(G, [[x] * G.order for x in range(m)])


def disjoint_union(X: GSet, Y: GSet) -> GSet:
    """Points of X followed by the points of Y, shifted."""
    if X.group != Y.group:
        raise InvalidActionError("Disjoint union needs both G-sets over the same group")
    shift = X.points
    rows = [list(row) for row in X.action] + [[y + shift for y in row] for row in Y.action]
    return GSet(X.group, rows)


def orbits(X: GSet) -> list[tuple[int, ...]]:
    """Orbits as sorted tuples, ordered by smallest point."""
    uf = UnionFind(X.points)
    for x in range(X.points):
        for y in X.action[x]:
            uf.union(x, y)
    return Partition(uf.canonical()).classes()


def is_transitive(X: GSet) -> bool:
    return len(orbits(X)) == 1


def stabilizer(X: GSet, x: int) -> Subgroup:
    """Stab_G(x) = {g : x·g = x}."""
    return Subgroup.of(g for g in X.group.elements() if X.act(x, g) == x)


def all_gset_congruences(X: GSet, *, bound: int | None = None, max_points: int | None = None) -> list[GSetCongruence]:
    """
    All action-compatible partitions, identity first and universal last.

    Raises:
        BoundExceededError: If the G-set or its congruence lattice is too large
    """
    settings = get_settings()
    max_points = max_points or settings.max_gset_points
    if X.points > max_points:
        raise BoundExceededError(f"G-set congruences are limited to {max_points} points, got {X.points}")
    lattice = enumerate_partition_lattice(X.points, X.translations(), bound or settings.max_lattice_size)
    return [GSetCongruence(v) for v in lattice]


def _require_transitive(X: GSet) -> None:
    if not is_transitive(X):
        raise NotTransitiveError(f"G-set with {X.points} points has {len(orbits(X))} orbits")


def phi(X: GSet, x: int | None, alpha: Partition) -> Subgroup:
    """
    H_α = {g : (x·g) α x}.

    Raises:
        NotTransitiveError: If X is not transitive
    """
    _require_transitive(X)
    x = 0 if x is None else x
    return Subgroup.of(g for g in X.group.elements() if alpha.class_of[X.act(x, g)] == alpha.class_of[x])


def psi(X: GSet, x: int | None, H: Subgroup) -> GSetCongruence:
    """
    α_H = {(x·g, x·h) : Hg = Hh} for a subgroup H containing Stab_G(x).

    Raises:
        NotTransitiveError: If X is not transitive
        StabilizerNotContainedError: If H does not contain the stabilizer of x
    """
    _require_transitive(X)
    x = 0 if x is None else x
    G = X.group
    H = subgroup(G, H.members)
    if not stabilizer(X, x).issubset(H):
        raise StabilizerNotContainedError(f"Subgroup {H.members} does not contain Stab({x})")

    # One group element carrying x to each point
    carrier: dict[int, int] = {}
    for g in G.elements():
        carrier.setdefault(X.act(x, g), g)

    first: dict[int, int] = {}
    vector = []
    for y in range(X.points):
        coset_key = min(G.mul(h, carrier[y]) for h in H.members)
        vector.append(first.setdefault(coset_key, y))
    return GSetCongruence(tuple(vector))


def lemma17_check(X: GSet, x: int | None, alpha: Partition, beta: Partition) -> Lemma17Check:
    """
    Compare α∘β = β∘α on X with H_α H_β = H_β H_α in G.

    Raises:
        NotTransitiveError: If X is not transitive
    """
    _require_transitive(X)
    congruences = partitions_commute(alpha.class_of, beta.class_of)
    subgroups = product_commutes(X.group, phi(X, x, alpha), phi(X, x, beta)).commutes
    return Lemma17Check(congruences_commute=congruences, subgroups_commute=subgroups)


def restriction_to_layer(S: FiniteSemigroup, group_members: Iterable[int], layer: Iterable[int]) -> GSet:
    """
    The two-sided action a·(g, h) = g·a·h of G*×G on a subset of S closed under it.

    G is the group carried by group_members (ids are positions in their sorted order), so
    the pair (g, h) has id g·|G| + h in G*×G. Point i is the i-th smallest member of layer.

    Raises:
        NotAGroupError: If group_members do not carry a group
        InvalidActionError: If the layer is not closed under the action
    """
    members = tuple(sorted(set(group_members)))
    points = tuple(sorted(set(layer)))
    G = as_group(restrict(S, members)[0])
    position = {a: i for i, a in enumerate(points)}

    rows = []
    for a in points:
        row = []
        for g in members:
            for h in members:
                image = S.mul(S.mul(g, a), h)
                if image not in position:
                    raise InvalidActionError(f"{g}*{a}*{h}={image} leaves the layer")
                row.append(position[image])
        rows.append(row)
    return GSet(direct_product(dual(G), G), rows)
