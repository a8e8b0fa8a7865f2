"""
This module compiles semigroup recipes into Cayley tables and checks the shapes that
characterize permutability for semigroups built from a group and a nilpotent part:

* the coset construction ``G ∪ G/Ga ∪ {0}`` and its mirror image,
* cyclic nilpotent semigroups and groups with a zero adjoined,
* Rees matrix semigroups and their decomposition,
* the two group-over-nilpotent verifiers (one-sided and two-sided identity).
"""

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from itertools import product

from .config import get_settings
from .congruence import is_permutable
from .core import Adjoined, FiniteSemigroup, adjoin, is_isomorphism, restrict, set_product, transpose
from .decomposition import putcha_decomposition, split_two_components
from .errors import (
    BoundExceededError,
    InternalInconsistencyError,
    NotAGroupError,
    NotCompletelySimpleError,
    ShapeError,
    ShapeMismatchError,
)
from .groups import FiniteGroup, Subgroup, as_group, dual, interval_above, product_commutes, right_cosets, subgroup
from .gset import restriction_to_layer, stabilizer
from .ideals import green, simplicity_flags

logger = logging.getLogger(__name__)


class Side(str, Enum):
    RIGHT = "right"
    LEFT = "left"


@dataclass(frozen=True)
class Construction1Spec:
    """A group, a subgroup Ga of it, and which side the cosets live on."""

    G: FiniteGroup
    Ga: Subgroup
    side: Side = Side.RIGHT


@dataclass(frozen=True)
class ReesMatrixSpec:
    """
    M(G; I, J; P) with P a J_size×I_size matrix of group element ids.

    Raises:
        ShapeError: If P has the wrong shape or holds invalid group ids
    """

    G: FiniteGroup
    I_size: int
    J_size: int
    P: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "P", tuple(tuple(int(x) for x in row) for row in self.P))
        if self.I_size < 1 or self.J_size < 1:
            raise ShapeError(f"Index sets must be non-empty, got |I|={self.I_size}, |J|={self.J_size}")
        if len(self.P) != self.J_size or any(len(row) != self.I_size for row in self.P):
            raise ShapeError(f"Sandwich matrix must be {self.J_size}x{self.I_size}")
        if any(not 0 <= x < self.G.order for row in self.P for x in row):
            raise ShapeError(f"Sandwich entries must be group ids in [0, {self.G.order})")


@dataclass(frozen=True)
class ConditionResult:
    """Whether HK = KH for all subgroups H, K above Ga; failing_pair is the first pair that does not."""

    holds: bool
    failing_pair: tuple[Subgroup, Subgroup] | None = None
    interval: tuple[Subgroup, ...] = ()


@dataclass(frozen=True)
class ReesDecomposition:
    """A Rees matrix recipe and the isomorphism bijection (S-id -> Rees id) onto it."""

    spec: ReesMatrixSpec
    bijection: tuple[int, ...]
    group_members: tuple[int, ...]


@dataclass(frozen=True)
class Theorem2Report:
    """
    Verification of a semilattice of a group and a null semigroup with a one-sided identity.

    Group ids refer to positions in group_members; Ga is a subgroup of that group.
    """

    shape_ok: bool
    side: Side
    group_members: tuple[int, ...]
    null_members: tuple[int, ...]
    transitive: bool
    Ga: Subgroup
    condition: bool
    permutable: bool
    isomorphic: bool
    failing_pair: tuple[Subgroup, Subgroup] | None = None

    @property
    def predicted_permutable(self) -> bool:
        return self.shape_ok and self.transitive and self.condition

    @property
    def consistent(self) -> bool:
        return self.predicted_permutable == self.permutable


@dataclass(frozen=True)
class LayerRecord:
    """One layer Nⁱ − Nⁱ⁺¹ and the two-sided stabilizer data of its representative."""

    index: int
    members: tuple[int, ...]
    representative: int
    covers_layer: bool
    stabilizer: Subgroup
    interval_size: int
    interval_commutes: bool
    failing_pair: tuple[Subgroup, Subgroup] | None = None


@dataclass(frozen=True)
class Theorem3Report:
    degree: int
    group_members: tuple[int, ...]
    layers: tuple[LayerRecord, ...]
    permutable: bool
    representatives_agree: bool | None = None
    disagreements: tuple[int, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> bool:
        return all(layer.covers_layer and layer.interval_commutes for layer in self.layers)

    @property
    def consistent(self) -> bool:
        return self.verdict == self.permutable


# -- builders -----------------------------------------------------------------


def _construct_right(G: FiniteGroup, Ga: Subgroup) -> FiniteSemigroup:
    cosets = right_cosets(G, subgroup(G, Ga.members))
    coset_of = {g: i for i, coset in enumerate(cosets) for g in coset}
    n = G.order
    zero = n + len(cosets)

    table = []
    for x in range(zero + 1):
        row = []
        for y in range(zero + 1):
            if y >= n or x == zero:
                row.append(zero)
            elif x < n:
                row.append(G.mul(x, y))
            else:
                row.append(n + coset_of[G.mul(cosets[x - n][0], y)])
        table.append(row)

    labels = [G.carrier.label(g) for g in G.elements()]
    labels += [f"[{G.carrier.label(coset[0])}]" for coset in cosets]
    labels.append("0")
    return FiniteSemigroup(table, labels)


def construct1(spec: Construction1Spec) -> FiniteSemigroup:
    """
    Build G ∪ {Ga·g} ∪ {0}: group ids first, then the cosets by smallest member, then 0.

    Cosets are translated on the right by G and every product whose right factor is a coset
    or 0 is 0. The left side is the mirror image, built over the dual group and transposed.

    Raises:
        NotASubgroupError: If Ga is not a subgroup of G
    """
    if Side(spec.side) is Side.LEFT:
        return transpose(_construct_right(dual(spec.G), spec.Ga))
    return _construct_right(spec.G, spec.Ga)


def _interval_commutes(G: FiniteGroup, interval: Sequence[Subgroup]) -> tuple[Subgroup, Subgroup] | None:
    for i, H in enumerate(interval):
        for K in interval[i + 1 :]:
            if not product_commutes(G, H, K).commutes:
                return (H, K)
    return None


def construction1_condition(G: FiniteGroup, Ga: Subgroup, *, bound: int | None = None) -> ConditionResult:
    """
    Check HK = KH for every pair of subgroups H, K containing Ga.

    Raises:
        BoundExceededError: If |G| exceeds the subgroup enumeration bound
    """
    if bound is None:
        bound = get_settings().max_group_order
    if G.order > bound:
        raise BoundExceededError(f"Subgroup enumeration is limited to order {bound}, got {G.order}")

    interval = tuple(interval_above(G, Ga))
    failing = _interval_commutes(G, interval)
    return ConditionResult(holds=failing is None, failing_pair=failing, interval=interval)


def cyclic_nilpotent(n: int) -> FiniteSemigroup:
    """
    {x, x², ..., xⁿ⁻¹, 0} with xⁱxʲ = xⁱ⁺ʲ below n and 0 otherwise; x^k has id k-1 and 0 is last.

    Raises:
        ShapeError: If n < 1
    """
    if n < 1:
        raise ShapeError(f"Order must be positive, got {n}")
    zero = n - 1
    table = [[i + j + 1 if i + j + 2 < n else zero for j in range(n)] for i in range(n)]
    table[zero] = [zero] * n
    for row in table:
        row[zero] = zero
    labels = ["x" if k == 1 else f"x^{k}" for k in range(1, n)] + ["0"]
    return FiniteSemigroup(table, labels)


def null_semigroup(n: int) -> FiniteSemigroup:
    """n elements whose products are all the last one."""
    return FiniteSemigroup([[n - 1] * n for _ in range(n)])


def group_with_zero(G: FiniteGroup) -> FiniteSemigroup:
    return adjoin(G.carrier, Adjoined.ZERO)


def rees_matrix(spec: ReesMatrixSpec) -> FiniteSemigroup:
    """(i, g, j)(k, h, l) = (i, g·P[j][k]·h, l); the triple has id ((i·|G|)+g)·|J| + j."""
    G, I, J, P = spec.G, spec.I_size, spec.J_size, spec.P
    n = G.order
    triples = [(i, g, j) for i in range(I) for g in range(n) for j in range(J)]

    def index(i: int, g: int, j: int) -> int:
        return (i * n + g) * J + j

    table = [
        [index(i, G.mul(G.mul(g, P[j][k]), h), m) for (k, h, m) in triples] for (i, g, j) in triples
    ]
    labels = [f"({i},{G.carrier.label(g)},{j})" for (i, g, j) in triples]
    return FiniteSemigroup(table, labels)


def normalized_sandwich_matrices(G: FiniteGroup, I_size: int, J_size: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every J×I matrix over G whose first row and first column are the identity."""
    e = G.identity
    free = (I_size - 1) * (J_size - 1)
    for values in product(G.elements(), repeat=free):
        rows = [tuple([e] * I_size)]
        for j in range(1, J_size):
            rows.append((e, *values[(j - 1) * (I_size - 1) : j * (I_size - 1)]))
        yield tuple(rows)


def rees_decompose(S: FiniteSemigroup) -> ReesDecomposition:
    """
    Present a completely simple S as M(G; I, J; P) with P normalized.

    G is the H-class of the smallest idempotent e. I lists the R-classes and J the
    L-classes, the class of e first and the rest by smallest member. Each R-class i gets the
    representative r_i in the L-class of e with e·r_i = e, each L-class j the representative
    q_j in the R-class of e with q_j·e = e; then P[j][i] = q_j·r_i and (i, g, j) ↦ r_i·g·q_j.

    Raises:
        NotCompletelySimpleError: If S is not completely simple
    """
    flags = simplicity_flags(S)
    if not flags.is_completely_simple:
        raise NotCompletelySimpleError(f"Semigroup of order {S.order} is not completely simple")

    structure = green(S)
    e = min(x for x in S.elements() if S.mul(x, x) == x)
    group_members = structure.H.class_members(e)
    G = as_group(restrict(S, group_members)[0])
    group_id = {x: i for i, x in enumerate(group_members)}

    def ordered(classes: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
        own = next(c for c in classes if e in c)
        return [own] + [c for c in classes if c is not own]

    R_classes = ordered(structure.R.classes())
    L_classes = ordered(structure.L.classes())
    L_e = set(structure.L.class_members(e))
    R_e = set(structure.R.class_members(e))

    def pick(candidates: list[int], condition) -> int:
        for x in candidates:
            if condition(x):
                return x
        raise InternalInconsistencyError("No normalizing representative in a completely simple semigroup")

    r = [pick(sorted(set(c) & L_e), lambda x: S.mul(e, x) == e) for c in R_classes]
    q = [pick(sorted(set(c) & R_e), lambda x: S.mul(x, e) == e) for c in L_classes]
    I_size, J_size = len(R_classes), len(L_classes)
    P = tuple(tuple(group_id[S.mul(q[j], r[i])] for i in range(I_size)) for j in range(J_size))
    spec = ReesMatrixSpec(G, I_size, J_size, P)

    n = G.order
    bijection = [-1] * S.order
    for i in range(I_size):
        for g, x in enumerate(group_members):
            for j in range(J_size):
                s = S.mul(S.mul(r[i], x), q[j])
                bijection[s] = (i * n + g) * J_size + j

    if -1 in bijection or not is_isomorphism(S, rees_matrix(spec), bijection):
        raise InternalInconsistencyError("Rees coordinates do not give an isomorphism")
    return ReesDecomposition(spec=spec, bijection=tuple(bijection), group_members=group_members)


def trivial_extension(G: FiniteGroup, N: FiniteSemigroup) -> FiniteSemigroup:
    """
    G ∪ N with G acting trivially on N from both sides; group ids first.

    N is expected to be nilpotent, which makes the group identity the identity of the result.
    """
    n, m = G.order, N.order
    table = []
    for x in range(n + m):
        row = []
        for y in range(n + m):
            if x < n and y < n:
                row.append(G.mul(x, y))
            elif x < n:
                row.append(y)
            elif y < n:
                row.append(x)
            else:
                row.append(n + N.mul(x - n, y - n))
        table.append(row)
    labels = [G.carrier.label(g) for g in G.elements()] + [f"n{N.label(a)}" for a in N.elements()]
    return FiniteSemigroup(table, labels)


def layered_extension(G: FiniteGroup, t: int) -> FiniteSemigroup:
    """
    G ∪ (G × {1..t-1}) ∪ {0}: (g, i)(h, j) = (gh, i+j) below t, else 0, with G translating
    the layers from both sides. (g, i) has id |G| + (i-1)·|G| + g and 0 is last.

    Raises:
        ShapeError: If t < 1
    """
    if t < 1:
        raise ShapeError(f"Nilpotency degree must be positive, got {t}")
    n = G.order
    zero = n * t

    def element(g: int, i: int) -> int:
        return zero if i >= t else (g if i == 0 else n + (i - 1) * n + g)

    def decode(x: int) -> tuple[int, int]:
        return (x % n, x // n)

    table = []
    for x in range(zero + 1):
        row = []
        for y in range(zero + 1):
            if x == zero or y == zero:
                row.append(zero)
                continue
            (g, i), (h, j) = decode(x), decode(y)
            row.append(element(G.mul(g, h), i + j))
        table.append(row)
    labels = [G.carrier.label(x % n) if x < n else f"{G.carrier.label(x % n)}x^{x // n}" for x in range(zero)]
    return FiniteSemigroup(table, [*labels, "0"])


# -- verifiers ----------------------------------------------------------------


def _group_and_rest(S: FiniteSemigroup) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split S into a group component and an ideal component, or raise ShapeMismatchError."""
    decomposition = putcha_decomposition(S)
    if len(decomposition.components) != 2:
        raise ShapeMismatchError(f"Expected two semilattice components, got {len(decomposition.components)}")
    upper, lower = split_two_components(decomposition)
    try:
        as_group(restrict(S, upper)[0])
    except NotAGroupError as err:
        raise ShapeMismatchError("Upper semilattice component is not a group") from err
    return upper, lower


def theorem2_verify(S: FiniteSemigroup, *, bound: int | None = None) -> Theorem2Report:
    """
    Check a semilattice of a group G and a null semigroup N whose group identity is a right
    (left) identity of S with SN = {0} (NS = {0}) against the coset construction.

    Ga is the stabilizer of the smallest non-zero element of N; the report compares the
    subgroup condition on Ga, permutability, and isomorphism with the construction.

    Raises:
        ShapeMismatchError: If S is not of that form
    """
    upper, lower = _group_and_rest(S)
    zero = next((z for z in lower if all(S.mul(z, s) == z == S.mul(s, z) for s in S.elements())), None)
    if zero is None or len(lower) < 2 or set_product(S, lower, lower) != {zero}:
        raise ShapeMismatchError("Ideal component is not a non-trivial null semigroup")

    everything = list(S.elements())
    e = next(x for x in upper if S.mul(x, x) == x)
    if all(S.mul(x, e) == x for x in everything) and set_product(S, everything, lower) == {zero}:
        side, work = Side.RIGHT, S
    elif all(S.mul(e, x) == x for x in everything) and set_product(S, lower, everything) == {zero}:
        side, work = Side.LEFT, transpose(S)
    else:
        raise ShapeMismatchError("Group identity is neither a right identity with SN={0} nor a left one with NS={0}")

    # Everything below is phrased for the right side; the left side runs on the transpose
    G = as_group(restrict(work, upper)[0])
    points = [a for a in lower if a != zero]
    base = points[0]
    transitive = {work.mul(base, g) for g in upper} == set(points)
    Ga = Subgroup.of(i for i, g in enumerate(upper) if work.mul(base, g) == base)

    condition = construction1_condition(G, Ga, bound=bound)
    permutable = is_permutable(S).permutable

    isomorphic = False
    if transitive:
        model = _construct_right(G, Ga)
        cosets = right_cosets(G, Ga)
        coset_index = {g: k for k, coset in enumerate(cosets) for g in coset}
        bijection = [0] * work.order
        for i, g in enumerate(upper):
            bijection[g] = i
        for i, g in enumerate(upper):
            bijection[work.mul(base, g)] = G.order + coset_index[i]
        bijection[zero] = model.order - 1
        isomorphic = is_isomorphism(work, model, bijection)

    logger.debug("Shape (%s) with |G|=%d, |N|=%d, Ga=%s", side.value, len(upper), len(lower), Ga.members)
    return Theorem2Report(
        shape_ok=True,
        side=side,
        group_members=upper,
        null_members=lower,
        transitive=transitive,
        Ga=Ga,
        condition=condition.holds,
        permutable=permutable,
        isomorphic=isomorphic,
        failing_pair=condition.failing_pair,
    )


def _layer_check(S: FiniteSemigroup, upper: tuple[int, ...], layer: tuple[int, ...], a: int):
    covers = set_product(S, set_product(S, upper, [a]), upper) == set(layer)
    X = restriction_to_layer(S, upper, layer)
    stab = stabilizer(X, layer.index(a))
    interval = interval_above(X.group, stab)
    failing = _interval_commutes(X.group, interval)
    return covers, stab, len(interval), failing


def theorem3_verify(S: FiniteSemigroup, *, all_representatives: bool | None = None) -> Theorem3Report:
    """
    Check a semilattice of a group G and a nilpotent N whose group identity is the identity
    of S, layer by layer: for each Nⁱ − Nⁱ⁺¹ take its smallest element a, test G·a·G against
    the layer, and test HK = KH above the stabilizer of a under (g, h) ↦ g·a·h in G*×G.

    Args:
        S: The semigroup
        all_representatives: Re-run every layer with each of its elements and record whether
            the outcome changes; defaults to the check_all_representatives setting

    Raises:
        ShapeMismatchError: If S is not of that form
    """
    if all_representatives is None:
        all_representatives = get_settings().check_all_representatives

    upper, lower = _group_and_rest(S)
    zero = next((z for z in lower if all(S.mul(z, s) == z == S.mul(s, z) for s in S.elements())), None)
    if zero is None:
        raise ShapeMismatchError("Ideal component has no zero")

    e = next(x for x in upper if S.mul(x, x) == x)
    if not all(S.mul(e, x) == x == S.mul(x, e) for x in S.elements()):
        raise ShapeMismatchError("Group identity is not the identity of S")

    powers = [frozenset(lower)]
    while powers[-1] != {zero}:
        following = set_product(S, powers[-1], lower)
        if following == powers[-1]:
            raise ShapeMismatchError("Ideal component is not nilpotent")
        powers.append(following)

    layers = []
    disagreements = []
    for i in range(len(powers) - 1):
        layer = tuple(sorted(powers[i] - powers[i + 1]))
        a = layer[0]
        covers, stab, size, failing = _layer_check(S, upper, layer, a)
        layers.append(
            LayerRecord(
                index=i + 1,
                members=layer,
                representative=a,
                covers_layer=covers,
                stabilizer=stab,
                interval_size=size,
                interval_commutes=failing is None,
                failing_pair=failing,
            )
        )
        if all_representatives:
            outcome = covers and failing is None
            for b in layer[1:]:
                covers_b, _, _, failing_b = _layer_check(S, upper, layer, b)
                if (covers_b and failing_b is None) != outcome:
                    disagreements.append(b)

    report = Theorem3Report(
        degree=len(powers),
        group_members=upper,
        layers=tuple(layers),
        permutable=is_permutable(S).permutable,
        representatives_agree=not disagreements if all_representatives else None,
        disagreements=tuple(disagreements),
    )
    logger.debug(
        "Two-sided layers: degree %d, verdict %s, permutable %s", report.degree, report.verdict, report.permutable
    )
    return report
