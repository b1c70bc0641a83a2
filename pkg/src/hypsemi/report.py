"""Rendering verdicts and oracle output as text or JSON.

JSON output always carries ``schemaVersion`` and the keys ``hyperbolic``,
``factors``, ``exceptional``, ``radicalDim`` and ``consistent`` (``null`` when
not computed).
"""
from __future__ import annotations

import json
from fractions import Fraction

from . import algebra
from .decision import Verdict
from .green import FactorKind, principal_factors
from .semigroup import FiniteSemigroup, adjoin

SCHEMA_VERSION = 1


def _frac(x: Fraction) -> str:
    return str(x)


def format_vector(v, labels) -> str:
    terms = []
    for c, lab in zip(v, labels):
        if not c:
            continue
        if c == 1:
            terms.append(f"+ {lab}")
        elif c == -1:
            terms.append(f"- {lab}")
        elif c < 0:
            terms.append(f"- {_frac(-c)}*{lab}")
        else:
            terms.append(f"+ {_frac(c)}*{lab}")
    if not terms:
        return "0"
    s = " ".join(terms)
    return s[2:] if s.startswith("+ ") else "-" + s[1:]


def oracle_report(S: FiniteSemigroup) -> dict:
    """Everything the algebra oracle knows about Q0S, JSON-ready."""
    S0 = adjoin(S, "zero")
    A = algebra.structure_constants(S0)
    out = {
        "schemaVersion": SCHEMA_VERSION,
        "dim": A.dim,
        "basis": list(A.names),
        "unital": A.identity_coords is not None,
        "identity": None,
        "radicalDim": None,
        "radicalBasis": None,
        "nilpotencyIndex": None,
        "t2Witness": None,
        "munnCollapse": [],
    }
    if A.identity_coords is not None:
        out["identity"] = [_frac(c) for c in A.identity_coords]
        rad = algebra.radical_basis(A)
        out["radicalDim"] = rad.dimension
        out["radicalBasis"] = [[_frac(c) for c in v] for v in rad.basis]
        out["nilpotencyIndex"] = rad.nilpotency_index
        if A.dim == 3:
            out["t2Witness"] = algebra.t2_witness_check(A)
    for i, F in enumerate(principal_factors(S0)):
        d = F.rees_data
        if F.kind is FactorKind.ZERO_SIMPLE and d.trivial_group and d.m == d.n:
            out["munnCollapse"].append(
                {"factorIndex": i, "sandwich": [list(r) for r in d.trivialized()], "ok": algebra.munn_collapse_check(d)}
            )
    return out


def verdict_dict(V: Verdict, cross: dict | None = None) -> dict:
    exc = V.exceptional
    d = {
        "schemaVersion": SCHEMA_VERSION,
        "hyperbolic": V.hyperbolic,
        "notUnital": V.not_unital,
        "factors": [
            {**F.to_dict(), "classification": c.to_dict(), "description": c.description}
            for F, c in zip(V.factors, V.classifications)
        ],
        "exceptional": None if exc is None else {**exc.to_dict(), "description": exc.description},
        "radicalDim": None,
        "consistent": None,
    }
    if cross is not None:
        d["radicalDim"] = cross["details"]["radicalDim"]
        d["consistent"] = cross["consistent"]
        d["crossCheck"] = {k: v for k, v in cross["details"].items() if k != "hyperbolic"}
    return d


def render_verdict(V: Verdict, mode: str = "text", cross: dict | None = None) -> str:
    if mode == "json":
        return json.dumps(verdict_dict(V, cross), sort_keys=True, ensure_ascii=False)
    lines = [f"hyperbolic: {'yes' if V.hyperbolic else 'no'}"]
    if V.not_unital:
        lines.append("Q0S is not unital")
    for F, c in zip(V.factors, V.classifications):
        elems = ", ".join(F.as_semigroup.label(k) for k in range(F.nonzero_count))
        lines.append(f"factor {c.factor_index} [{F.kind.value}] {{{elems}}}: {c.description}")
    exc = V.exceptional
    if exc is not None:
        lines.append(f"K: {exc.description}")
    elif V.hyperbolic:
        lines.append("K: none (every factor is a Higman group)")
    if cross is not None:
        lines.append(f"radical dimension: {cross['details']['radicalDim']}")
        lines.append(f"consistent: {'yes' if cross['consistent'] else 'no'}")
        for p in cross["details"]["problems"]:
            lines.append(f"  problem: {p}")
    return "\n".join(lines) + "\n"


def render_oracle(report: dict, mode: str = "text") -> str:
    labels = report["basis"]
    if mode == "json":
        return json.dumps(report, sort_keys=True, ensure_ascii=False)
    lines = [f"dim: {report['dim']}"]
    if not report["unital"]:
        lines.append("identity: non-unital")
        lines.append("Q0S is not unital")
    else:
        ident = [Fraction(c) for c in report["identity"]]
        lines.append(f"identity: {format_vector(ident, labels)}")
        lines.append(f"radical dimension: {report['radicalDim']}")
        for v in report["radicalBasis"]:
            lines.append(f"  {format_vector([Fraction(c) for c in v], labels)}")
        lines.append(f"nilpotency index: {report['nilpotencyIndex']}")
        if report["t2Witness"] is not None:
            lines.append(f"T2(Q) witness: {'yes' if report['t2Witness'] else 'no'}")
    for m in report["munnCollapse"]:
        lines.append(f"Munn collapse for factor {m['factorIndex']} {m['sandwich']}: {'yes' if m['ok'] else 'no'}")
    return "\n".join(lines) + "\n"


def render_factors(S: FiniteSemigroup, mode: str = "text") -> str:
    factors = principal_factors(S)
    if mode == "json":
        return json.dumps(
            {"schemaVersion": SCHEMA_VERSION, "factors": [F.to_dict() for F in factors]},
            sort_keys=True,
            ensure_ascii=False,
        )
    lines = []
    for i, F in enumerate(factors):
        elems = ", ".join(F.as_semigroup.label(k) for k in range(F.nonzero_count))
        line = f"factor {i} [{F.kind.value}] {{{elems}}}"
        d = F.rees_data
        if d is not None:
            P = [["θ" if x is None else d.group.label(x) for x in row] for row in d.sandwich]
            line += f" |G|={d.group.order} m={d.m} n={d.n} P={P}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def report(obj, mode: str = "text") -> str:
    """Render a :class:`Verdict` or an :func:`oracle_report` dict."""
    if isinstance(obj, Verdict):
        return render_verdict(obj, mode)
    return render_oracle(obj, mode)
