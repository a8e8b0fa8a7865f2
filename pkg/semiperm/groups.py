"""
This module provides finite groups as validated semigroups, their subgroups, cosets,
setwise products, duals and direct products, plus a catalog of small named groups.
"""

import logging
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations, permutations, product

from .config import get_settings
from .core import FiniteSemigroup, generated_subsemigroup, set_product, special_elements
from .errors import BoundExceededError, NotAGroupError, NotASubgroupError

logger = logging.getLogger(__name__)


class FiniteGroup:
    """A group: its carrier semigroup, identity and inverse map."""

    def __init__(self, carrier: FiniteSemigroup, identity: int, inverse: Sequence[int], name: str | None = None):
        self.carrier = carrier
        self.identity = identity
        self.inverse = tuple(inverse)
        self.name = name or f"G{carrier.order}"

    @property
    def order(self) -> int:
        return self.carrier.order

    def mul(self, a: int, b: int) -> int:
        return self.carrier.mul(a, b)

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return self.carrier.elements()

    def is_abelian(self) -> bool:
        return bool((self.carrier.table == self.carrier.table.T).all())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.carrier == other.carrier

    def __hash__(self) -> int:
        return hash(self.carrier)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted members."""

    members: tuple[int, ...]

    @classmethod
    def of(cls, members: Iterable[int]) -> "Subgroup":
        return cls(tuple(sorted(set(members))))

    def __contains__(self, a: object) -> bool:
        return a in self.members

    def __len__(self) -> int:
        return len(self.members)

    def issubset(self, other: "Subgroup") -> bool:
        return set(self.members) <= set(other.members)


@dataclass(frozen=True)
class ProductCommutation:
    commutes: bool
    hk: frozenset[int]
    kh: frozenset[int]


def as_group(S: FiniteSemigroup, name: str | None = None) -> FiniteGroup:
    """
    View S as a group.

    Raises:
        NotAGroupError: If S has no two-sided identity or some element has no inverse
    """
    e = special_elements(S).identity
    if e is None:
        raise NotAGroupError("no identity")

    rows = S.rows
    inverse = []
    for a in S.elements():
        candidates = [b for b in S.elements() if rows[a][b] == e and rows[b][a] == e]
        if not candidates:
            raise NotAGroupError(f"element {a} has no inverse")
        inverse.append(candidates[0])
    return FiniteGroup(S, e, inverse, name)


def group_from_elements(elements: Sequence[Hashable], mul: Callable, name: str | None = None) -> FiniteGroup:
    """Tabulate a group given as concrete elements and a multiplication function."""
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    labels = [str(x).replace(" ", "") for x in elements]
    return as_group(FiniteSemigroup(table, labels), name)


def cyclic_group(n: int) -> FiniteGroup:
    """Z_n with elements 0..n-1 and addition mod n."""
    return group_from_elements(list(range(n)), lambda a, b: (a + b) % n, f"Z{n}")


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on lexicographically ordered permutations; p*q applies p first, then q."""
    perms = list(permutations(range(n)))
    return group_from_elements(perms, lambda p, q: tuple(q[p[x]] for x in range(n)), f"S{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """The dihedral group of order 2n as pairs (k, f) meaning r^k s^f."""
    elements = [(k, f) for f in (0, 1) for k in range(n)]

    def mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        (k1, f1), (k2, f2) = x, y
        return ((k1 + (-k2 if f1 else k2)) % n, f1 ^ f2)

    return group_from_elements(elements, mul, f"D{n}")


def quaternion_group() -> FiniteGroup:
    """Q8 as the unit quaternions ±1, ±i, ±j, ±k."""
    units = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    elements = [tuple(sign * c for c in unit) for unit in units for sign in (1, -1)]

    def mul(x: tuple, y: tuple) -> tuple:
        a1, b1, c1, d1 = x
        a2, b2, c2, d2 = y
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    return group_from_elements(elements, mul, "Q8")


def alternating_group(n: int) -> FiniteGroup:
    """A_n: the even permutations, multiplied as in :func:`symmetric_group`."""
    perms = [p for p in permutations(range(n)) if sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n)) % 2 == 0]
    return group_from_elements(perms, lambda p, q: tuple(q[p[x]] for x in range(n)), f"A{n}")


def dicyclic_group(n: int) -> FiniteGroup:
    """Dic_n of order 4n as pairs (k, f) meaning r^k x^f, with r^(2n) = 1, x² = r^n and xr = r⁻¹x."""
    elements = [(k, f) for f in (0, 1) for k in range(2 * n)]

    def mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        (k1, f1), (k2, f2) = x, y
        k = k1 + (-k2 if f1 else k2) + (n if f1 and f2 else 0)
        return (k % (2 * n), f1 ^ f2)

    return group_from_elements(elements, mul, f"Dic{n}")


def elementary_abelian_group(p: int, rank: int) -> FiniteGroup:
    """(Z_p)^rank as tuples under componentwise addition."""
    elements = list(product(range(p), repeat=rank))
    return group_from_elements(
        elements, lambda x, y: tuple((a + b) % p for a, b in zip(x, y, strict=True)), f"Z{p}^{rank}"
    )


def direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    """G1×G2 with pair (i1, i2) stored as id i1*|G2| + i2."""
    n2 = G2.order
    pairs = [(i1, i2) for i1 in G1.elements() for i2 in G2.elements()]
    table = [[G1.mul(a1, b1) * n2 + G2.mul(a2, b2) for (b1, b2) in pairs] for (a1, a2) in pairs]
    labels = [f"({G1.carrier.label(i1)},{G2.carrier.label(i2)})" for i1, i2 in pairs]
    inverse = [G1.inv(i1) * n2 + G2.inv(i2) for i1, i2 in pairs]
    identity = G1.identity * n2 + G2.identity
    return FiniteGroup(FiniteSemigroup(table, labels), identity, inverse, f"{G1.name}x{G2.name}")


def dual(G: FiniteGroup) -> FiniteGroup:
    """The dual group G*: same elements, x*y := yx."""
    carrier = FiniteSemigroup(G.carrier.table.T, G.carrier.labels)
    return FiniteGroup(carrier, G.identity, G.inverse, f"{G.name}*")


def small_groups(max_order: int = 8) -> list[FiniteGroup]:
    """
    One representative of each isomorphism type of order at most max_order (the catalog stops at 12).
    """
    catalog = [cyclic_group(n) for n in range(1, min(max_order, 12) + 1)]
    catalog += [
        elementary_abelian_group(2, 2),
        symmetric_group(3),
        dihedral_group(4),
        quaternion_group(),
        direct_product(cyclic_group(2), cyclic_group(4)),
        elementary_abelian_group(2, 3),
        elementary_abelian_group(3, 2),
        dihedral_group(5),
        direct_product(cyclic_group(2), cyclic_group(6)),
        dihedral_group(6),
        alternating_group(4),
        dicyclic_group(3),
    ]
    return sorted((G for G in catalog if G.order <= max_order), key=lambda G: G.order)


def is_subgroup(G: FiniteGroup, members: Iterable[int]) -> bool:
    """True when members is a non-empty subset closed under product and inverse."""
    members = set(members)
    if not members or G.identity not in members:
        return False
    return all(G.inv(a) in members for a in members) and set_product(G.carrier, members, members) <= members


def subgroup(G: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """
    Validate a member set as a subgroup.

    Raises:
        NotASubgroupError: If the set is not a subgroup of G
    """
    members = set(members)
    if any(not 0 <= a < G.order for a in members) or not is_subgroup(G, members):
        raise NotASubgroupError(f"{sorted(members)} is not a subgroup of {G.name}")
    return Subgroup.of(members)


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Subgroup generated by gens; in a finite group the generated subsemigroup is already a subgroup."""
    gens = set(gens) | {G.identity}
    return Subgroup.of(generated_subsemigroup(G.carrier, gens))


def _saturate(G: FiniteGroup, start: Iterable[Subgroup]) -> set[Subgroup]:
    """Close a family of subgroups under adding one more generator."""
    found = set(start)
    frontier = list(found)
    while frontier:
        fresh = []
        for H in frontier:
            for g in G.elements():
                if g in H:
                    continue
                K = generated_subgroup(G, (*H.members, g))
                if K not in found:
                    found.add(K)
                    fresh.append(K)
        frontier = fresh
    return found


def _subgroup_key(H: Subgroup) -> tuple[int, tuple[int, ...]]:
    return (len(H), H.members)


def all_subgroups(G: FiniteGroup, *, bound: int | None = None) -> list[Subgroup]:
    """
    Every subgroup, sorted by (size, members).

    Subgroups generated by at most two elements seed the search; adding one element at a
    time to found subgroups until nothing new appears reaches every subgroup.

    Raises:
        BoundExceededError: If |G| exceeds the bound
    """
    if bound is None:
        bound = get_settings().max_group_order
    if G.order > bound:
        raise BoundExceededError(f"Subgroup enumeration is limited to order {bound}, got {G.order}")

    seeds = {generated_subgroup(G, pair) for pair in combinations(G.elements(), 2)}
    seeds |= {generated_subgroup(G, [g]) for g in G.elements()}
    found = _saturate(G, seeds)
    logger.debug("%s has %d subgroups", G.name, len(found))
    return sorted(found, key=_subgroup_key)


def interval_above(G: FiniteGroup, H: Subgroup) -> list[Subgroup]:
    """
    All subgroups K with H ⊆ K ⊆ G, sorted by (size, members).

    Raises:
        NotASubgroupError: If H is not a subgroup of G
    """
    subgroup(G, H.members)
    return sorted(_saturate(G, [H]), key=_subgroup_key)


def product_commutes(G: FiniteGroup, H: Subgroup, K: Subgroup) -> ProductCommutation:
    """Compare the setwise products HK and KH."""
    hk = set_product(G.carrier, H.members, K.members)
    kh = set_product(G.carrier, K.members, H.members)
    return ProductCommutation(commutes=hk == kh, hk=hk, kh=kh)


def right_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple[int, ...]]:
    """The right cosets Hg as sorted tuples, ordered by smallest member."""
    cosets = {tuple(sorted({G.mul(h, g) for h in H.members})) for g in G.elements()}
    return sorted(cosets)
