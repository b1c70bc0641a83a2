"""Deciding whether Q0S has the hyperbolic property.

All principal factors but at most one must be Higman groups; the remaining
factor K must be one of

1. a null factor (one nonzero element),
2. M0({1}; 1, 2; (1;1)) or its left-zero dual M0({1}; 2, 1; (1 1)),
3. M0({1}; 2, 2; P) with P invertible over Q and not all ones,
4. C5, C8 or C12,
5. S3, D4, Q12 or C4:C4.

Null factors with two or more nonzero elements are rejected: they contribute
at least two dimensions to the radical, which already rules hyperbolicity out.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from . import algebra
from .green import FactorKind, PrincipalFactor, principal_factors
from .groups import EXCEPTIONAL_ABELIAN, is_higman, recognize_exceptional_group
from .rees import normalize_sandwich, trivialized_rank
from .semigroup import FiniteSemigroup, ReesMatrixData, adjoin
from .errors import NotUnital


class VerdictKind(str, Enum):
    HIGMAN_GROUP = "HigmanGroup"
    EXCEPTIONAL_NULL = "ExceptionalNull"
    EXCEPTIONAL_RIGHT_ZERO = "ExceptionalRightZero"
    EXCEPTIONAL_TWO_BY_TWO = "ExceptionalTwoByTwo"
    EXCEPTIONAL_ABELIAN_GROUP = "ExceptionalAbelianGroup"
    EXCEPTIONAL_NONABELIAN_GROUP = "ExceptionalNonabelianGroup"
    FAILS = "Fails"

    @property
    def exceptional(self) -> bool:
        return self.value.startswith("Exceptional")


class FailReason(str, Enum):
    RADICAL_TOO_BIG = "RadicalTooBig"
    NOT_HIGMAN = "NotHigmanNotExceptional"
    NONTRIVIAL_GROUP = "NontrivialGroup"
    BAD_DIMENSIONS = "BadDimensions"
    ALL_ONES = "AllOnesSandwich"
    SINGULAR = "SandwichSingular"


IDENTITY_2X2 = ((1, 0), (0, 1))
UNITRIANGULAR_2X2 = ((1, 1), (0, 1))
ALL_ONES_2X2 = ((1, 1), (1, 1))


@dataclass(frozen=True)
class FactorClassification:
    factor_index: int
    verdict_kind: VerdictKind
    detail: dict = field(default_factory=dict)

    @property
    def description(self) -> str:
        k, d = self.verdict_kind, self.detail
        if k is VerdictKind.HIGMAN_GROUP:
            return f"Higman group of order {d.get('groupOrder')}"
        if k is VerdictKind.EXCEPTIONAL_NULL:
            return "null factor"
        if k is VerdictKind.EXCEPTIONAL_RIGHT_ZERO:
            return f"{d.get('orientation', 'right')}-zero factor"
        if k is VerdictKind.EXCEPTIONAL_TWO_BY_TWO:
            return f"2x2 Rees factor with sandwich {d.get('normalForm')}"
        if k is VerdictKind.EXCEPTIONAL_ABELIAN_GROUP:
            return f"abelian group {d.get('label')}"
        if k is VerdictKind.EXCEPTIONAL_NONABELIAN_GROUP:
            return f"nonabelian group {d.get('label')}"
        return f"fails ({d.get('reason')})"

    def to_dict(self) -> dict:
        return {"factorIndex": self.factor_index, "verdictKind": self.verdict_kind.value, "detail": self.detail}


def _two_by_two_normal_form(pbar) -> tuple:
    # invertible regular 0/1 2x2 matrices are permutation-equivalent to one of these
    return IDENTITY_2X2 if sum(map(sum, pbar)) == 2 else UNITRIANGULAR_2X2


def classify_factor(F: PrincipalFactor, index: int = 0) -> FactorClassification:
    V = VerdictKind
    if F.kind is FactorKind.NULL:
        if F.nonzero_count == 1:
            return FactorClassification(index, V.EXCEPTIONAL_NULL, {"nonzeroCount": 1})
        return FactorClassification(
            index, V.FAILS, {"reason": FailReason.RADICAL_TOO_BIG.value, "nonzeroCount": F.nonzero_count}
        )

    data = F.rees_data
    if F.kind is FactorKind.GROUP:
        G = data.group
        if is_higman(G):
            return FactorClassification(index, V.HIGMAN_GROUP, {"groupOrder": G.order})
        label = recognize_exceptional_group(G)
        if label is None:
            return FactorClassification(
                index, V.FAILS, {"reason": FailReason.NOT_HIGMAN.value, "groupOrder": G.order}
            )
        kind = V.EXCEPTIONAL_ABELIAN_GROUP if label in EXCEPTIONAL_ABELIAN else V.EXCEPTIONAL_NONABELIAN_GROUP
        return FactorClassification(index, kind, {"label": label, "groupOrder": G.order})

    m, n = data.m, data.n
    base = {"m": m, "n": n, "groupOrder": data.group.order}

    def fail(reason):
        return FactorClassification(index, V.FAILS, {**base, "reason": reason.value})

    if m * n not in (1, 2, 4) or {m, n} == {1, 4}:
        return fail(FailReason.BAD_DIMENSIONS)
    if not data.trivial_group:
        return fail(FailReason.NONTRIVIAL_GROUP)
    pbar = data.trivialized()
    if m * n == 2:
        # regular over the trivial group forces P = (1;1) or (1 1)
        orientation = "right" if m == 1 else "left"
        return FactorClassification(index, V.EXCEPTIONAL_RIGHT_ZERO, {**base, "orientation": orientation})
    if pbar == ALL_ONES_2X2:
        return fail(FailReason.ALL_ONES)
    if trivialized_rank(data) != 2:
        return fail(FailReason.SINGULAR)
    return FactorClassification(
        index,
        V.EXCEPTIONAL_TWO_BY_TWO,
        {
            **base,
            "sandwich": [list(r) for r in pbar],
            "normalForm": [list(r) for r in _two_by_two_normal_form(pbar)],
        },
    )


@dataclass(frozen=True)
class Verdict:
    hyperbolic: bool
    classifications: tuple
    factors: tuple
    exceptional_index: Optional[int] = None
    not_unital: bool = False
    oracle_report: Optional[dict] = None

    @property
    def exceptional(self) -> Optional[FactorClassification]:
        if self.exceptional_index is None:
            return None
        return self.classifications[self.exceptional_index]


def decide(S: FiniteSemigroup, extension=None) -> Verdict:
    """Classify every principal factor and apply the at-most-one-exception rule.

    A non-unital Q0S gets ``hyperbolic=False`` with ``not_unital`` set.
    """
    S0 = adjoin(S, "zero")
    factors = principal_factors(S0, extension)
    classes = tuple(classify_factor(F, i) for i, F in enumerate(factors))
    unital = algebra.structure_constants(S0).identity_coords is not None
    odd = [c for c in classes if c.verdict_kind is not VerdictKind.HIGMAN_GROUP]
    ok = unital and len(odd) <= 1 and all(c.verdict_kind.exceptional for c in odd)
    exc = odd[0].factor_index if ok and odd else None
    return Verdict(ok, classes, tuple(factors), exc, not unital)


def lemma_constraints(data: ReesMatrixData) -> dict:
    """Necessary conditions on a single Rees factor and the predicted radical."""
    m, n = data.m, data.n
    t = trivialized_rank(data)
    mn = m * n
    if mn == 1:
        allowed = True
    elif mn not in (2, 4) or {m, n} == {1, 4} or not data.trivial_group:
        allowed = False
    elif mn == 2:
        allowed = True
    else:
        allowed = data.trivialized() != ALL_ONES_2X2 and t == 2
    if data.trivial_group:
        predicted_dim = mn - t * t
        quotient = {1: "Q", 2: "M2(Q)"}.get(t, f"M{t}(Q)")
    elif mn == 1:
        predicted_dim, quotient = 0, "QG"
    else:
        predicted_dim, quotient = None, None
    return {"allowed": allowed, "predictedRadicalDim": predicted_dim, "predictedQuotient": quotient, "rank": t}


def cross_check(S: FiniteSemigroup) -> dict:
    """Compare :func:`decide` with the algebra oracle's necessary conditions."""
    S0 = adjoin(S, "zero")
    A = algebra.structure_constants(S0)
    if A.identity_coords is None:
        raise NotUnital("Q0S is not unital")
    verdict = decide(S0)
    rad = algebra.radical_basis(A)
    problems = []
    if verdict.hyperbolic and rad.dimension > 1:
        problems.append(f"decide=yes but dim J = {rad.dimension}")
    details = {"radicalDim": rad.dimension, "dim": A.dim, "hyperbolic": verdict.hyperbolic}
    K = verdict.exceptional
    if K is not None and K.verdict_kind is VerdictKind.EXCEPTIONAL_RIGHT_ZERO:
        if rad.dimension != 1:
            problems.append(f"right-zero K but dim J = {rad.dimension}")
        if A.dim == 3:
            details["t2Witness"] = algebra.t2_witness_check(A)
            if not details["t2Witness"]:
                problems.append("no T2(Q) witness")
    if K is not None and K.verdict_kind is VerdictKind.EXCEPTIONAL_TWO_BY_TWO:
        data = verdict.factors[K.factor_index].rees_data
        details["munnCollapse"] = algebra.munn_collapse_check(normalize_sandwich(data).normalized)
        if not details["munnCollapse"]:
            problems.append("Munn collapse is not an isomorphism")
    details["problems"] = problems
    return {"consistent": not problems, "verdict": verdict, "details": details}
