"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with its runtime and limit.
Run directly with ``python3 tests/test_acceptance.py`` for just those lines.
"""
import itertools
import sys
import time
from collections import Counter
from fractions import Fraction


from hypsemi import (
    ReesMatrixData,
    VerdictKind,
    adjoin,
    compute_green,
    cross_check,
    decide,
    decompose_zero_simple,
    enumerate_semigroups,
    is_isomorphic,
    lemma_constraints,
    munn_collapse_check,
    munn_radical_dimension,
    normalize_sandwich,
    oracle_report,
    rees_matrix_construct,
    trivialized_rank,
)
from hypsemi.catalog import EXCEPTIONAL_GROUPS, HIGMAN_CORPUS, NON_HYPERBOLIC_GROUPS, TRIVIAL, catalog, get
from hypsemi.green import linear_extensions
from hypsemi.groups import cyclic_group, is_higman

LINES = []


def _emit(number, title, ok, elapsed, limit, note=""):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"[{status}] criterion {number}: {title} ({elapsed:.2f}s, limit {limit:g}s){note}"
    LINES.append(line)
    return status == "PASS"


def _run(number, title, limit, body):
    t0 = time.perf_counter()
    problems = body()
    elapsed = time.perf_counter() - t0
    note = "" if not problems else f" problems: {problems[:5]}"
    assert _emit(number, title, not problems, elapsed, limit, note), note or f"took {elapsed:.2f}s"


def _regular(P, m, n):
    rows_ok = all(any(P[j][i] is not None for i in range(m)) for j in range(n))
    cols_ok = all(any(P[j][i] is not None for j in range(n)) for i in range(m))
    return rows_ok and cols_ok


def _sandwiches(values, m, n):
    for flat in itertools.product(values, repeat=m * n):
        P = tuple(tuple(flat[j * m:(j + 1) * m]) for j in range(n))
        if _regular(P, m, n):
            yield P


# 1 ------------------------------------------------------------------------

def _t1_golden():
    problems = []
    S = get("T1")
    V = decide(S)
    if not V.hyperbolic:
        problems.append("decide says no")
    K = V.exceptional
    if K is None or K.verdict_kind is not VerdictKind.EXCEPTIONAL_RIGHT_ZERO:
        problems.append(f"K is {K}")
    else:
        d = V.factors[K.factor_index].rees_data
        if d.m * d.n != 2:
            problems.append("K is not the nm=2 factor")
    rep = oracle_report(S)
    if rep["dim"] != 3 or rep["radicalDim"] != 1:
        problems.append(f"dim {rep['dim']}, dim J {rep['radicalDim']}")
    else:
        v = [Fraction(c) for c in rep["radicalBasis"][0]]
        coeff = dict(zip(rep["basis"], v))
        if not (coeff["e"] == -coeff["f"] != 0 and coeff["1"] == 0):
            problems.append(f"radical basis {coeff} not proportional to e - f")
    if rep["t2Witness"] is not True:
        problems.append("no T2(Q) witness")
    return problems


def test_criterion_1_t1_golden():
    _run(1, "T1 golden case", 1.0, _t1_golden)


# 2 ------------------------------------------------------------------------

LEMMA_TABLE = [
    # (m, n, sandwich n x m, allowed, dim J inside the Munn ideal, expect collapse)
    (1, 1, ((0,),), True, 0, None),
    (1, 2, ((0,), (0,)), True, 1, None),
    (2, 1, ((0, 0),), True, 1, None),
    (1, 4, ((0,), (0,), (0,), (0,)), False, 3, None),
    (2, 2, ((0, None), (None, 0)), True, 0, True),
    (2, 2, ((0, 0), (None, 0)), True, 0, True),
    (2, 2, ((0, 0), (0, 0)), False, 3, None),
]


def _lemma_table():
    problems = []
    for m, n, P, allowed, dim_j, collapse in LEMMA_TABLE:
        data = ReesMatrixData(TRIVIAL, m, n, P)
        got = lemma_constraints(data)
        rad = munn_radical_dimension(data)
        if got["allowed"] != allowed or got["predictedRadicalDim"] != dim_j or rad != dim_j:
            problems.append((m, n, P, got["allowed"], rad))
        if collapse is not None and munn_collapse_check(data) != collapse:
            problems.append((m, n, P, "collapse"))
    return problems


def test_criterion_2_lemma_table():
    _run(2, "sandwich constraint table over the trivial group", 5.0, _lemma_table)


# 3 ------------------------------------------------------------------------

def _rank_law():
    problems, count = [], 0
    for m in range(1, 4):
        for n in range(1, 4):
            for P in _sandwiches((0, None), m, n):
                data = ReesMatrixData(TRIVIAL, m, n, P)
                t = trivialized_rank(data)
                count += 1
                if munn_radical_dimension(data) != m * n - t * t:
                    problems.append((m, n, P))
    assert count > 0
    return problems


def test_criterion_3_rank_law():
    _run(3, "rank law dim J = mn - t^2 for all regular 0/1 sandwiches, m,n <= 3", 60.0, _rank_law)


# 4 ------------------------------------------------------------------------

def _catalog_verdicts():
    problems = []
    expect = {name: True for name in EXCEPTIONAL_GROUPS + HIGMAN_CORPUS}
    expect.update({name: False for name in NON_HYPERBOLIC_GROUPS})
    for name, want in expect.items():
        G = get(name)
        if name in HIGMAN_CORPUS and not (G.order <= 16 and is_higman(G)):
            problems.append(f"{name} is not a Higman group of order <= 16")
        if decide(adjoin(G, "zero", force=True)).hyperbolic != want:
            problems.append(name)
    return problems


def test_criterion_4_catalog_verdicts():
    _run(4, "catalog group verdicts (zero adjoined)", 30.0, _catalog_verdicts)


# 5 ------------------------------------------------------------------------

def _exhaustive():
    problems, count = [], 0
    for order in range(1, 5):
        for S in enumerate_semigroups(order, with_zero=True, unital_only=True):
            count += 1
            c = cross_check(S)
            dim_j, yes = c["details"]["radicalDim"], c["verdict"].hyperbolic
            if not c["consistent"] or (yes and dim_j > 1) or (dim_j >= 2 and yes):
                problems.append(S.table)
    assert count > 0
    return problems


def test_criterion_5_exhaustive_order_4():
    _run(5, "exhaustive cross-check, order <= 4, zero present, Q0S unital", 600.0, _exhaustive)


# 6 ------------------------------------------------------------------------

def _rees_round_trip():
    problems = []
    for q in (1, 2, 3):
        G = cyclic_group(q)
        for m in (1, 2):
            for n in (1, 2):
                for P in _sandwiches(tuple(range(q)) + (None,), m, n):
                    data = ReesMatrixData(G, m, n, P)
                    S = rees_matrix_construct(data)
                    back = decompose_zero_simple(S)
                    if (back.m, back.n, back.group.order) != (m, n, q) or not is_isomorphic(
                        rees_matrix_construct(back), S
                    ):
                        problems.append((q, m, n, P))
                        continue
                    norm = normalize_sandwich(back).normalized
                    if norm.sandwich[0][0] != norm.group.identity:
                        problems.append((q, m, n, P, "normal form"))
    return problems


def test_criterion_6_rees_round_trip():
    _run(6, "Rees round trip for G in C1, C2, C3 and m,n <= 2", 60.0, _rees_round_trip)


# 7 ------------------------------------------------------------------------

def _factor_invariance():
    problems = []
    for name, entry in catalog().items():
        S0 = adjoin(entry.object, "zero")
        exts = list(itertools.islice(linear_extensions(compute_green(S0)), 3))
        kinds = [Counter(c.verdict_kind for c in decide(S0, ext).classifications) for ext in exts]
        if any(k != kinds[0] for k in kinds):
            problems.append(name)
    return problems


def test_criterion_7_factor_invariance():
    _run(7, "classification multiset invariant across 3 linear extensions", 10.0, _factor_invariance)


if __name__ == "__main__":
    ok = True
    for fn in [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]:
        try:
            fn()
        except AssertionError:
            ok = False
    print("\n".join(LINES))
    sys.exit(0 if ok else 1)
