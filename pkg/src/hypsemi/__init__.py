"""Hyperbolic property of contracted rational semigroup algebras Q0S.

Decides the property from the principal factors of a finite semigroup and
checks the answer against exact computations in Q0S.
"""
from .algebra import (
    AlgebraRep,
    RadicalData,
    find_identity,
    munn_collapse_check,
    munn_radical_dimension,
    radical_basis,
    structure_constants,
    t2_witness_check,
)
from .decision import (
    FactorClassification,
    Verdict,
    VerdictKind,
    classify_factor,
    cross_check,
    decide,
    lemma_constraints,
)
from .green import FactorKind, GreenStructure, PrincipalFactor, compute_green, principal_factors, principal_series
from .groups import GroupFingerprint, fingerprint, is_higman, recognize_exceptional_group
from .io import parse_input, render_semigroup
from .report import oracle_report, report
from .rees import SandwichAnalysis, decompose_zero_simple, normalize_sandwich, trivialized_rank
from .semigroup import (
    FiniteSemigroup,
    ReesMatrixData,
    adjoin,
    find_isomorphism,
    is_isomorphic,
    rees_matrix_construct,
    validate_table,
    zero_direct_union,
)
from .enumeration import enumerate_semigroups

__version__ = "0.1.0"

__all__ = [
    "AlgebraRep",
    "FactorClassification",
    "FactorKind",
    "FiniteSemigroup",
    "GreenStructure",
    "GroupFingerprint",
    "PrincipalFactor",
    "RadicalData",
    "ReesMatrixData",
    "SandwichAnalysis",
    "Verdict",
    "VerdictKind",
    "adjoin",
    "classify_factor",
    "compute_green",
    "cross_check",
    "decide",
    "decompose_zero_simple",
    "enumerate_semigroups",
    "find_identity",
    "find_isomorphism",
    "fingerprint",
    "is_higman",
    "is_isomorphic",
    "lemma_constraints",
    "munn_collapse_check",
    "munn_radical_dimension",
    "normalize_sandwich",
    "oracle_report",
    "parse_input",
    "principal_factors",
    "principal_series",
    "radical_basis",
    "recognize_exceptional_group",
    "rees_matrix_construct",
    "render_semigroup",
    "report",
    "structure_constants",
    "t2_witness_check",
    "trivialized_rank",
    "validate_table",
    "zero_direct_union",
]
