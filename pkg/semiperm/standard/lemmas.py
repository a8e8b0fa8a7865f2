"""
This module contains the stock census checks: one predicate per structural property of
finite permutable semigroups, plus tallies of the basic predicates.
"""

from itertools import combinations

from ..checks import check
from ..congruence import (
    all_congruences,
    congruences_by_partition_filter,
    is_permutable,
    join,
    meet,
    quotient,
)
from ..construction import theorem2_verify, theorem3_verify
from ..core import FiniteSemigroup, is_monogenic, is_semilattice, restrict, set_product, special_elements
from ..decomposition import (
    Case,
    classify,
    identity_sidedness,
    putcha_decomposition,
    smallest_semilattice_congruence,
    split_two_components,
)
from ..errors import NotAGroupError, ShapeMismatchError
from ..groups import as_group
from ..ideals import (
    all_ideals,
    green,
    is_archimedean,
    kernel,
    nilpotency_profile,
    rees_quotient,
    simplicity_flags,
)

# -- shared shape helpers -----------------------------------------------------


def _permutable(S: FiniteSemigroup) -> bool:
    return is_permutable(S).permutable


def _is_group(S: FiniteSemigroup) -> bool:
    try:
        as_group(S)
    except NotAGroupError:
        return False
    return True


def _group_over_nilpotent(S: FiniteSemigroup):
    """(group members, nilpotent members, group identity, zero) when S has that shape, else None."""
    decomposition = putcha_decomposition(S)
    if len(decomposition.components) != 2:
        return None
    upper, lower = split_two_components(decomposition)
    if not _is_group(restrict(S, upper)[0]):
        return None
    if not nilpotency_profile(restrict(S, lower)[0]).is_nilpotent:
        return None
    zero = special_elements(S).zero
    e = identity_sidedness(S, upper).identity
    return upper, lower, e, zero


def _powers(S: FiniteSemigroup, lower: tuple[int, ...], zero: int) -> list[frozenset[int]]:
    powers = [frozenset(lower)]
    while powers[-1] != {zero}:
        powers.append(set_product(S, powers[-1], lower))
    return powers


def _two_sided_layers(S: FiniteSemigroup):
    """Group members, powers of N and layers when the group identity is the identity of S and N is non-trivial."""
    shape = _group_over_nilpotent(S)
    if shape is None:
        return None
    upper, lower, e, zero = shape
    if len(lower) < 2 or not all(S.mul(e, x) == x == S.mul(x, e) for x in S.elements()):
        return None
    powers = _powers(S, lower, zero)
    layers = [powers[i] - powers[i + 1] for i in range(len(powers) - 1)]
    return upper, powers, layers


def _double_coset(S: FiniteSemigroup, upper: tuple[int, ...], a: int) -> frozenset[int]:
    return set_product(S, set_product(S, upper, [a]), upper)


# -- checks -------------------------------------------------------------------


@check()
def congruence_oracle(S: FiniteSemigroup) -> bool | None:
    """The closure-based congruence lattice equals the brute-force partition filter."""
    if S.order > 6:
        return None
    return set(all_congruences(S)) == set(congruences_by_partition_filter(S))


@check()
def lemma2(S: FiniteSemigroup) -> bool | None:
    """The ideals of a permutable semigroup form a chain."""
    if not _permutable(S):
        return None
    return all_ideals(S).is_chain


@check()
def lemma3(S: FiniteSemigroup) -> bool | None:
    """A nil semigroup is permutable iff its ideals form a chain."""
    if not nilpotency_profile(S).is_nil:
        return None
    return _permutable(S) == all_ideals(S).is_chain


@check()
def lemma4(S: FiniteSemigroup) -> bool | None:
    """A permutable semigroup with a proper ideal K has no non-trivial group image, nor has K."""
    if not _permutable(S):
        return None
    proper = [ideal for ideal in all_ideals(S).ideals if len(ideal) < S.order]
    if not proper:
        return None

    def has_group_image(T: FiniteSemigroup) -> bool:
        return any(alpha.num_classes > 1 and _is_group(quotient(T, alpha)) for alpha in all_congruences(T))

    if has_group_image(S):
        return False
    return not any(has_group_image(restrict(S, ideal.members)[0]) for ideal in proper)


@check()
def lemma5(S: FiniteSemigroup) -> bool | None:
    """Every ideal of a permutable semigroup lies in one class of a congruence or is a union of its classes."""
    if not _permutable(S):
        return None
    for alpha in all_congruences(S):
        for ideal in all_ideals(S).ideals:
            inside_one = len({alpha.class_of[x] for x in ideal.members}) == 1
            saturated = all(set(alpha.class_members(x)) <= ideal.members for x in ideal.members)
            if not (inside_one or saturated):
                return False
    return True


@check()
def lemma7(S: FiniteSemigroup) -> bool | None:
    """Every quotient of a permutable semigroup is permutable."""
    if not _permutable(S):
        return None
    return all(_permutable(quotient(S, alpha)) for alpha in all_congruences(S))


@check()
def lemma8(S: FiniteSemigroup) -> bool | None:
    """A semilattice is permutable iff it has at most two elements."""
    if not is_semilattice(S):
        return None
    return _permutable(S) == (S.order <= 2)


@check()
def lemma9(S: FiniteSemigroup) -> bool | None:
    """A finite nil semigroup is nilpotent."""
    profile = nilpotency_profile(S)
    if not profile.is_nil:
        return None
    return profile.is_nilpotent


@check()
def lemma10(S: FiniteSemigroup) -> bool:
    """S is archimedean iff its kernel is completely simple and the Rees quotient by it is nilpotent."""
    K = kernel(S)
    extension = simplicity_flags(restrict(S, K.members)[0]).is_completely_simple and (
        nilpotency_profile(rees_quotient(S, K)).is_nilpotent
    )
    return is_archimedean(S) == extension


@check()
def lemma11(S: FiniteSemigroup) -> bool | None:
    """A permutable non-archimedean Putcha semigroup is a completely simple S₁ over an S₀ of kernel type."""
    if not _permutable(S) or is_archimedean(S):
        return None
    decomposition = putcha_decomposition(S)
    if not decomposition.all_components_archimedean:
        return None
    if len(decomposition.components) != 2:
        return False

    upper, lower = split_two_components(decomposition)
    top, _ = restrict(S, upper)
    if not simplicity_flags(top).is_completely_simple:
        return False
    structure = green(top)
    if structure.R.num_classes > 2 or structure.L.num_classes > 2:
        return False

    bottom, _ = restrict(S, lower)
    K = kernel(bottom)
    return simplicity_flags(restrict(bottom, K.members)[0]).is_completely_simple and (
        nilpotency_profile(rees_quotient(bottom, K)).is_nilpotent
    )


@check()
def lemma12(S: FiniteSemigroup) -> bool | None:
    """Over a permutable group-plus-nilpotent shape the group identity is a left or a right identity."""
    shape = _group_over_nilpotent(S)
    if shape is None or not _permutable(S):
        return None
    sides = identity_sidedness(S, shape[0])
    return sides.is_left_identity or sides.is_right_identity


@check()
def lemma13(S: FiniteSemigroup) -> bool | None:
    """With Ne = N, eN is {0} or N; with eN = N, Ne is {0} or N."""
    shape = _group_over_nilpotent(S)
    if shape is None or not _permutable(S):
        return None
    upper, lower, _, zero = shape
    sides = identity_sidedness(S, upper)
    N = frozenset(lower)
    if sides.Ne == N and sides.eN not in ({zero}, N):
        return False
    return not (sides.eN == N and sides.Ne not in ({zero}, N))


@check()
def lemma15(S: FiniteSemigroup) -> bool | None:
    """With a right identity and SN = {0}, every non-zero a of N satisfies aG = N*."""
    shape = _group_over_nilpotent(S)
    if shape is None:
        return None
    upper, lower, e, zero = shape
    everything = list(S.elements())
    right_case = all(S.mul(x, e) == x for x in everything) and set_product(S, everything, lower) == {zero}
    if len(lower) < 2 or not right_case or not _permutable(S):
        return None
    points = set(lower) - {zero}
    return all(set_product(S, [a], upper) == points for a in points)


@check()
def lemma16(S: FiniteSemigroup) -> bool | None:
    """With GN = {0} and aG = N*, non-universal congruences have zero-class {0} or N and keep G apart."""
    shape = _group_over_nilpotent(S)
    if shape is None:
        return None
    upper, lower, _, zero = shape
    points = set(lower) - {zero}
    if (
        not points
        or set_product(S, lower, lower) != {zero}
        or set_product(S, upper, lower) != {zero}
        or not all(set_product(S, [a], upper) == points for a in points)
    ):
        return None

    group = set(upper)
    for alpha in all_congruences(S):
        if alpha.is_universal():
            continue
        if set(alpha.class_members(zero)) not in ({zero}, set(lower)):
            return False
        if any(not set(alpha.class_members(g)) <= group for g in upper):
            return False
    return True


@check()
def lemma18(S: FiniteSemigroup) -> bool | None:
    """In a permutable two-sided shape G·a·G is the whole layer of a."""
    shape = _two_sided_layers(S)
    if shape is None or not _permutable(S):
        return None
    upper, _, layers = shape
    return all(_double_coset(S, upper, a) == layer for layer in layers for a in layer)


@check()
def lemma19(S: FiniteSemigroup) -> bool | None:
    """When G·a·G covers every layer, the ideals are exactly S and the powers of N."""
    shape = _two_sided_layers(S)
    if shape is None:
        return None
    upper, powers, layers = shape
    if not all(_double_coset(S, upper, a) == layer for layer in layers for a in layer):
        return None
    expected = {frozenset(S.elements()), *powers}
    return {ideal.members for ideal in all_ideals(S).ideals} == expected


@check()
def lemma20(S: FiniteSemigroup) -> bool | None:
    """When G·a·G covers every layer, a non-universal congruence has zero-class Nʲ and keeps layers above it."""
    shape = _two_sided_layers(S)
    if shape is None:
        return None
    upper, powers, layers = shape
    if not all(_double_coset(S, upper, a) == layer for layer in layers for a in layer):
        return None

    group = set(upper)
    zero = next(iter(powers[-1]))
    for alpha in all_congruences(S):
        if alpha.is_universal():
            continue
        zero_class = frozenset(alpha.class_members(zero))
        if zero_class not in powers:
            return False
        j = powers.index(zero_class)
        if any(not set(alpha.class_members(g)) <= group for g in upper):
            return False
        for layer in layers[:j]:
            if any(not set(alpha.class_members(a)) <= layer for a in layer):
                return False
    return True


@check()
def theorem1(S: FiniteSemigroup) -> bool | None:
    """An archimedean permutable semigroup is cyclic nilpotent or completely simple, not both."""
    if S.order < 2 or not is_archimedean(S) or not _permutable(S):
        return None
    cyclic_nilpotent = is_monogenic(S) is not None and nilpotency_profile(S).is_nilpotent
    return cyclic_nilpotent != simplicity_flags(S).is_completely_simple


@check()
def theorem1_converse(S: FiniteSemigroup) -> bool | None:
    """Cyclic nilpotent semigroups and permutable completely simple ones are archimedean and permutable."""
    cyclic_nilpotent = is_monogenic(S) is not None and nilpotency_profile(S).is_nilpotent
    completely_simple = simplicity_flags(S).is_completely_simple
    if not cyclic_nilpotent and not completely_simple:
        return None
    permutable = _permutable(S)
    if completely_simple and not cyclic_nilpotent and not permutable:
        return None
    return is_archimedean(S) and permutable


@check()
def theorem2(S: FiniteSemigroup) -> bool | None:
    """Over a group with a one-sided identity on a null part, permutability matches the subgroup condition."""
    try:
        report = theorem2_verify(S)
    except ShapeMismatchError:
        return None
    return report.consistent and (report.isomorphic or not report.transitive)


@check()
def theorem3(S: FiniteSemigroup) -> bool | None:
    """Over a group with a two-sided identity on a nilpotent part, the layer test matches permutability."""
    try:
        report = theorem3_verify(S, all_representatives=True)
    except ShapeMismatchError:
        return None
    return report.consistent and bool(report.representatives_agree)


@check()
def putcha_components(S: FiniteSemigroup) -> bool | None:
    """A permutable Putcha semigroup has at most two archimedean components."""
    if not _permutable(S):
        return None
    decomposition = putcha_decomposition(S)
    if not decomposition.all_components_archimedean:
        return None
    return len(decomposition.components) <= 2


@check()
def semilattice_minimal(S: FiniteSemigroup) -> bool:
    """The smallest semilattice congruence refines every congruence with a semilattice quotient."""
    eta = smallest_semilattice_congruence(S)
    semilattice_congruences = [alpha for alpha in all_congruences(S) if is_semilattice(quotient(S, alpha))]
    return eta in semilattice_congruences and all(eta.refines(alpha) for alpha in semilattice_congruences)


@check()
def kernel_simple(S: FiniteSemigroup) -> bool:
    """The kernel is completely simple and lies in every ideal."""
    K = kernel(S)
    if not simplicity_flags(restrict(S, K.members)[0]).is_completely_simple:
        return False
    return all(K.issubset(ideal) for ideal in all_ideals(S).ideals)


@check()
def green_join(S: FiniteSemigroup) -> bool:
    """J is the join of R and L, and H is their meet."""
    structure = green(S)
    return (
        structure.J.class_of == join(structure.R, structure.L).class_of
        and structure.H.class_of == meet(structure.R, structure.L).class_of
    )


@check()
def classification(S: FiniteSemigroup) -> bool:
    """The classifier agrees with the permutability test and always lands in a named case."""
    report = classify(S)
    if (report.case is Case.NOT_PERMUTABLE) == report.permutability.permutable:
        return False
    return report.case is not Case.TWO_COMPONENT or report.zero_case is not None


@check()
def ideal_lattice(S: FiniteSemigroup) -> bool:
    """Ideals are closed under union and intersection."""
    members = {ideal.members for ideal in all_ideals(S).ideals}
    return all(a | b in members and (not a & b or a & b in members) for a, b in combinations(members, 2))


@check(tally=True)
def permutable(S: FiniteSemigroup) -> bool:
    """Permutable semigroups."""
    return _permutable(S)


@check(tally=True)
def putcha(S: FiniteSemigroup) -> bool:
    """Putcha semigroups."""
    return putcha_decomposition(S).all_components_archimedean


@check(tally=True)
def archimedean(S: FiniteSemigroup) -> bool:
    """Archimedean semigroups."""
    return is_archimedean(S)


@check(tally=True)
def nil(S: FiniteSemigroup) -> bool:
    """Nil semigroups."""
    return nilpotency_profile(S).is_nil
