"""Rees matrix coordinates for 0-simple semigroups and sandwich analysis."""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import IrregularSandwich, NotZeroSimple
from .semigroup import (
    FiniteSemigroup,
    ReesMatrixData,
    check_rees_data,
    group_inverse,
    rees_element_index,
    rees_matrix_construct,
    validate_table,
)


def _as_semigroup(F) -> FiniteSemigroup:
    return getattr(F, "as_semigroup", F)


def rees_coordinates(F):
    """Rees data for a 0-simple ``F`` plus the explicit isomorphism.

    Returns ``(data, phi)`` where ``phi[idx]`` is the element of ``F`` matching
    element ``idx`` of ``rees_matrix_construct(data)``.
    """
    S = _as_semigroup(F)
    t, z = S.table, S.zero
    if z is None:
        raise NotZeroSimple("a 0-simple semigroup has a zero")
    nz = S.nonzero()
    if not nz:
        raise NotZeroSimple("the trivial semigroup is not 0-simple")
    # local import keeps module import order acyclic
    from .green import compute_green

    green = compute_green(S)
    nz_classes = [c for c in green.j_classes if z not in c]
    if len(nz_classes) != 1:
        raise NotZeroSimple("nonzero elements do not form a single J-class")
    if all(t[x][y] == z for x in nz for y in nz):
        raise NotZeroSimple("null semigroup")
    idem = [x for x in nz if t[x][x] == x]
    if not idem:
        raise AssertionError("finite 0-simple semigroup without a nonzero idempotent")
    e = min(idem)
    H = sorted(green.h_class_of(e))
    R_e, L_e = green.r_class_of(e), green.l_class_of(e)
    r_classes = [c for c in green.r_classes if z not in c]
    l_classes = [c for c in green.l_classes if z not in c]

    # r_i in R_i ∩ L_e, q_j in R_e ∩ L_j; e itself where it qualifies
    reps_r = [e if e in Ri else min(Ri & L_e) for Ri in r_classes]
    reps_q = [e if e in Lj else min(Lj & R_e) for Lj in l_classes]

    hindex = {x: k for k, x in enumerate(H)}
    gtable = [[hindex[t[a][b]] for b in H] for a in H]
    G = validate_table(gtable, identity=hindex[e], names=[S.label(x) for x in H])
    sandwich = []
    for q in reps_q:
        row = []
        for r in reps_r:
            p = t[q][r]
            row.append(None if p == z else hindex[p])
        sandwich.append(tuple(row))
    data = ReesMatrixData(G, len(r_classes), len(l_classes), tuple(sandwich))

    phi = [None] * (G.order * data.m * data.n + 1)
    for i, r in enumerate(reps_r):
        for j, q in enumerate(reps_q):
            for gk, g in enumerate(H):
                phi[rees_element_index(data, gk, i, j)] = t[t[r][g]][q]
    phi[-1] = z
    return data, phi


def decompose_zero_simple(F) -> ReesMatrixData:
    """``M0(G; m, n; P)`` coordinates of a 0-simple semigroup (or principal factor).

    G is the maximal subgroup at the lowest-index nonzero idempotent; the
    result is checked to reconstruct ``F`` up to isomorphism.
    """
    S = _as_semigroup(F)
    data, phi = rees_coordinates(S)
    R = rees_matrix_construct(data)
    if sorted(phi) != list(range(S.order)):
        raise AssertionError("Rees coordinate map is not a bijection")
    for a in range(R.order):
        for b in range(R.order):
            if phi[R.table[a][b]] != S.table[phi[a]][phi[b]]:
                raise AssertionError("Rees coordinate map is not multiplicative")
    return data


@dataclass(frozen=True)
class SandwichAnalysis:
    original: ReesMatrixData
    normalized: ReesMatrixData
    trivialized: tuple
    rank_over_q: int
    # permutations applied before scaling: new row j is old row row_perm[j]
    row_perm: tuple = ()
    col_perm: tuple = ()


def trivialized_rank(data: ReesMatrixData) -> int:
    """Rank over Q of the 0/1 matrix obtained by sending θ to 0 and G to 1."""
    return linalg.rank(data.trivialized())


def normalize_sandwich(data: ReesMatrixData) -> SandwichAnalysis:
    """Move a nonzero entry to position (1,1) and scale it to the identity.

    Row ``j`` of P is multiplied on the left by ``p_{1,1}^{-1}`` when ``j``
    is the first row; this is a Rees isomorphism.
    """
    if not data.regular:
        raise IrregularSandwich("sandwich matrix is not regular")
    check_rees_data(data)
    P = data.sandwich
    pos = next((j, i) for j in range(data.n) for i in range(data.m) if P[j][i] is not None)
    row_perm = list(range(data.n))
    col_perm = list(range(data.m))
    row_perm[0], row_perm[pos[0]] = row_perm[pos[0]], row_perm[0]
    col_perm[0], col_perm[pos[1]] = col_perm[pos[1]], col_perm[0]
    Q = [[P[row_perm[j]][col_perm[i]] for i in range(data.m)] for j in range(data.n)]
    G = data.group
    u = group_inverse(G, Q[0][0])
    Q[0] = [None if x is None else G.table[u][x] for x in Q[0]]
    normalized = ReesMatrixData(G, data.m, data.n, tuple(tuple(r) for r in Q))
    return SandwichAnalysis(
        data,
        normalized,
        data.trivialized(),
        trivialized_rank(data),
        tuple(row_perm),
        tuple(col_perm),
    )
