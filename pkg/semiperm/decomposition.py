"""
This module provides the smallest semilattice congruence, the archimedean (Putcha)
components it induces, and the classification of finite permutable Putcha semigroups.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum

from .congruence import Congruence, PermutabilityReport, congruence_closure, is_permutable, quotient
from .core import FiniteSemigroup, is_monogenic, is_semilattice, restrict, set_product, special_elements
from .errors import InternalInconsistencyError, NotAGroupError
from .groups import as_group
from .ideals import is_archimedean, kernel, nilpotency_profile, simplicity_flags

logger = logging.getLogger(__name__)


class Case(str, Enum):
    """Top-level verdict of :func:`classify`."""

    NOT_PERMUTABLE = "NotPermutable"
    NOT_PUTCHA = "NotPutcha"
    ARCH_CYCLIC_NILPOTENT = "ArchCyclicNilpotent"
    ARCH_COMPLETELY_SIMPLE = "ArchCompletelySimple"
    TWO_COMPONENT = "TwoComponent"


class UpperKind(str, Enum):
    """What the upper component S₁ of a two-component semigroup is."""

    GROUP = "Group"
    COMPLETELY_SIMPLE_NON_GROUP = "CompletelySimpleNonGroup"


class ZeroComponentCase(str, Enum):
    """What the ideal component S₀ of a two-component semigroup is."""

    COMPLETELY_SIMPLE = "CS"
    NULL_RIGHT = "NullRight"
    NULL_LEFT = "NullLeft"
    NILPOTENT_WITH_IDENTITY = "NilpotentWithIdentity"
    CASE_4B = "Case4b"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class SemilatticeDecomposition:
    """
    The components of S under its smallest semilattice congruence.

    Components are listed by smallest member; component i is element i of component_semilattice.
    """

    eta: Congruence
    components: tuple[tuple[int, ...], ...]
    component_semilattice: FiniteSemigroup
    archimedean: tuple[bool, ...]

    @property
    def all_components_archimedean(self) -> bool:
        return all(self.archimedean)


@dataclass(frozen=True)
class ClassificationReport:
    case: Case
    upper_kind: UpperKind | None = None
    zero_case: ZeroComponentCase | None = None
    evidence: dict[str, tuple[int, ...]] = field(default_factory=dict)
    permutability: PermutabilityReport | None = None

    def label(self) -> str:
        """Tagged name, e.g. ``TwoComponent{Group, NullRight}``."""
        if self.case is Case.TWO_COMPONENT:
            return f"{self.case.value}{{{self.upper_kind.value}, {self.zero_case.value}}}"
        return self.case.value


@dataclass(frozen=True)
class IdentitySidedness:
    """How the identity of a group component acts on the rest of S."""

    identity: int
    is_left_identity: bool
    is_right_identity: bool
    eN: frozenset[int]
    Ne: frozenset[int]


def smallest_semilattice_congruence(S: FiniteSemigroup) -> Congruence:
    """
    The congruence generated by all (a, a²) and (ab, ba).

    Raises:
        InternalInconsistencyError: If the quotient fails to be a semilattice
    """
    pairs = [(a, S.mul(a, a)) for a in S.elements()]
    pairs += [(S.mul(a, b), S.mul(b, a)) for a in S.elements() for b in S.elements() if a < b]
    eta = congruence_closure(S, pairs)
    if not is_semilattice(quotient(S, eta)):
        raise InternalInconsistencyError("Quotient by the semilattice congruence is not a semilattice")
    return eta


def putcha_decomposition(S: FiniteSemigroup) -> SemilatticeDecomposition:
    """Split S into its semilattice components and test each one for being archimedean."""
    eta = smallest_semilattice_congruence(S)
    components = tuple(eta.classes())
    archimedean = tuple(is_archimedean(restrict(S, c)[0]) for c in components)
    logger.debug("Semilattice decomposition into %d components, archimedean=%s", len(components), archimedean)
    return SemilatticeDecomposition(
        eta=eta,
        components=components,
        component_semilattice=quotient(S, eta),
        archimedean=archimedean,
    )


def split_two_components(decomposition: SemilatticeDecomposition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    Return (upper, lower) for a two-component decomposition; the lower one is an ideal.
    """
    first, second = decomposition.components
    Q = decomposition.component_semilattice
    # In the 2-chain quotient the bottom absorbs the top
    return (second, first) if Q.mul(0, 1) == 0 else (first, second)


def identity_sidedness(S: FiniteSemigroup, group_members: Iterable[int]) -> IdentitySidedness:
    """
    Locate the identity e of a group component and compare it with the rest N of S.

    Raises:
        NotAGroupError: If group_members do not carry a group
    """
    members = tuple(sorted(set(group_members)))
    G, _ = restrict(S, members)
    e = members[as_group(G).identity]
    others = [x for x in S.elements() if x not in members]
    everything = list(S.elements())
    return IdentitySidedness(
        identity=e,
        is_left_identity=all(S.mul(e, x) == x for x in everything),
        is_right_identity=all(S.mul(x, e) == x for x in everything),
        eN=set_product(S, [e], others),
        Ne=set_product(S, others, [e]),
    )


def _classify_archimedean(S: FiniteSemigroup, report: PermutabilityReport) -> ClassificationReport:
    generator = is_monogenic(S)
    cyclic_nilpotent = generator is not None and nilpotency_profile(S).is_nilpotent
    completely_simple = simplicity_flags(S).is_completely_simple

    if S.order == 1:
        return ClassificationReport(Case.ARCH_COMPLETELY_SIMPLE, evidence={"kernel": (0,)}, permutability=report)
    if cyclic_nilpotent == completely_simple:
        raise InternalInconsistencyError(
            f"Archimedean permutable semigroup of order {S.order} has cyclic_nilpotent={cyclic_nilpotent}, "
            f"completely_simple={completely_simple}"
        )
    if cyclic_nilpotent:
        return ClassificationReport(
            Case.ARCH_CYCLIC_NILPOTENT, evidence={"generator": (generator,)}, permutability=report
        )
    return ClassificationReport(
        Case.ARCH_COMPLETELY_SIMPLE, evidence={"kernel": tuple(S.elements())}, permutability=report
    )


def _zero_case_over_group(S: FiniteSemigroup, upper: tuple[int, ...], lower: tuple[int, ...]) -> ZeroComponentCase:
    if simplicity_flags(restrict(S, lower)[0]).is_completely_simple:
        return ZeroComponentCase.COMPLETELY_SIMPLE
    if len(kernel(S)) > 1:
        return ZeroComponentCase.CASE_4B

    sides = identity_sidedness(S, upper)
    zero = special_elements(S).zero
    everything = list(S.elements())
    if sides.is_left_identity and sides.is_right_identity:
        return ZeroComponentCase.NILPOTENT_WITH_IDENTITY
    if sides.is_right_identity and set_product(S, everything, lower) == {zero}:
        return ZeroComponentCase.NULL_RIGHT
    if sides.is_left_identity and set_product(S, lower, everything) == {zero}:
        return ZeroComponentCase.NULL_LEFT
    raise InternalInconsistencyError(
        f"Group identity {sides.identity} fits none of the one-sided or two-sided identity cases"
    )


def classify(S: FiniteSemigroup, *, bound: int | None = None) -> ClassificationReport:
    """
    Classify S: not permutable, not Putcha, one of the two archimedean families, or a
    semilattice of two components with the kind of each component.

    Raises:
        InternalInconsistencyError: If the computed structure contradicts the classification
        BoundExceededError: If the congruence lattice is too large
    """
    report = is_permutable(S, bound=bound)
    if not report.permutable:
        return ClassificationReport(Case.NOT_PERMUTABLE, permutability=report)

    decomposition = putcha_decomposition(S)
    if not decomposition.all_components_archimedean:
        return ClassificationReport(Case.NOT_PUTCHA, permutability=report)

    components = decomposition.components
    if len(components) == 1:
        return _classify_archimedean(S, report)
    if len(components) > 2:
        raise InternalInconsistencyError(f"Permutable Putcha semigroup with {len(components)} components")

    upper, lower = split_two_components(decomposition)
    evidence = {"upper": upper, "lower": lower, "kernel": kernel(S).sorted_members()}

    top, _ = restrict(S, upper)
    try:
        as_group(top)
    except NotAGroupError:
        if not simplicity_flags(top).is_completely_simple:
            raise InternalInconsistencyError("Upper component of a permutable semigroup is not completely simple")
        zero_case = (
            ZeroComponentCase.COMPLETELY_SIMPLE
            if simplicity_flags(restrict(S, lower)[0]).is_completely_simple
            else ZeroComponentCase.UNCLASSIFIED
        )
        return ClassificationReport(
            Case.TWO_COMPONENT, UpperKind.COMPLETELY_SIMPLE_NON_GROUP, zero_case, evidence, report
        )

    evidence["group_identity"] = (identity_sidedness(S, upper).identity,)
    zero_case = _zero_case_over_group(S, upper, lower)
    return ClassificationReport(Case.TWO_COMPONENT, UpperKind.GROUP, zero_case, evidence, report)
