"""
This module provides the main entry point for the semiperm library.
"""

from .census import CensusConfig, CensusReport, census_verify
from .checks import check
from .config import Settings, configure, get_settings
from .congruence import Congruence, all_congruences, commutes, compose, congruence_closure, is_permutable, quotient
from .construction import (
    Construction1Spec,
    ReesMatrixSpec,
    Side,
    construct1,
    construction1_condition,
    cyclic_nilpotent,
    group_with_zero,
    rees_decompose,
    rees_matrix,
    theorem2_verify,
    theorem3_verify,
)
from .core import FiniteSemigroup, validate_table
from .decomposition import classify, putcha_decomposition, smallest_semilattice_congruence
from .enumeration import Mode, canonical_form, enumerate_associative
from .errors import (
    BoundExceededError,
    NonAssociativeError,
    NotAGroupError,
    SemigroupError,
    ShapeError,
    ShapeMismatchError,
)
from .formats import dump_sgp, loads, parse_sgp
from .groups import FiniteGroup, Subgroup, all_subgroups, as_group
from .gset import GSet, all_gset_congruences, lemma17_check, phi, psi

__all__ = [
    "BoundExceededError",
    "CensusConfig",
    "CensusReport",
    "Congruence",
    "Construction1Spec",
    "FiniteGroup",
    "FiniteSemigroup",
    "GSet",
    "Mode",
    "NonAssociativeError",
    "NotAGroupError",
    "ReesMatrixSpec",
    "SemigroupError",
    "Settings",
    "ShapeError",
    "ShapeMismatchError",
    "Side",
    "Subgroup",
    "all_congruences",
    "all_gset_congruences",
    "all_subgroups",
    "as_group",
    "canonical_form",
    "census_verify",
    "check",
    "classify",
    "commutes",
    "compose",
    "configure",
    "congruence_closure",
    "construct1",
    "construction1_condition",
    "cyclic_nilpotent",
    "dump_sgp",
    "enumerate_associative",
    "get_settings",
    "group_with_zero",
    "is_permutable",
    "lemma17_check",
    "loads",
    "parse_sgp",
    "phi",
    "psi",
    "putcha_decomposition",
    "quotient",
    "rees_decompose",
    "rees_matrix",
    "smallest_semilattice_congruence",
    "theorem2_verify",
    "theorem3_verify",
    "validate_table",
]
