import itertools

import pytest

from hypsemi import ReesMatrixData, decompose_zero_simple, is_isomorphic, normalize_sandwich, rees_matrix_construct, trivialized_rank
from hypsemi.catalog import TRIVIAL, rees_over_trivial, t_semigroup
from hypsemi.errors import IrregularSandwich, NotZeroSimple
from hypsemi.groups import cyclic_group, symmetric_group
from hypsemi.semigroup import adjoin
from hypsemi.catalog import null_semigroup


def test_decompose_t():
    d = decompose_zero_simple(t_semigroup())
    assert (d.group.order, d.m, d.n) == (1, 1, 2)
    assert d.sandwich == ((0,), (0,))


def test_decompose_brandt_round_trip():
    B2 = rees_over_trivial(2, 2, [[1, 0], [0, 1]])
    d = decompose_zero_simple(B2)
    assert (d.group.order, d.m, d.n) == (1, 2, 2)
    assert is_isomorphic(rees_matrix_construct(d), B2)
    assert d.trivialized() == ((1, 0), (0, 1))


def test_decompose_group_with_zero():
    S3 = symmetric_group(3)
    d = decompose_zero_simple(adjoin(S3, "zero"))
    assert (d.m, d.n) == (1, 1)
    assert d.sandwich == ((d.group.identity,),)
    assert is_isomorphic(d.group, S3)


def test_decompose_rejects_non_zero_simple():
    with pytest.raises(NotZeroSimple):
        decompose_zero_simple(null_semigroup(1))
    with pytest.raises(NotZeroSimple):
        decompose_zero_simple(adjoin(t_semigroup(), "identity"))


def test_normalize_column_over_group():
    G = cyclic_group(3)
    data = ReesMatrixData(G, 1, 2, ((1,), (2,)))
    an = normalize_sandwich(data)
    assert an.normalized.sandwich[0][0] == G.identity
    assert an.trivialized == ((1,), (1,))
    assert an.rank_over_q == 1
    assert is_isomorphic(rees_matrix_construct(data), rees_matrix_construct(an.normalized))


def test_normalize_moves_nonzero_entry_to_corner():
    G = cyclic_group(2)
    data = ReesMatrixData(G, 2, 2, ((None, 1), (1, None)))
    an = normalize_sandwich(data)
    assert an.normalized.sandwich[0][0] == G.identity
    assert is_isomorphic(rees_matrix_construct(data), rees_matrix_construct(an.normalized))


def test_normalize_identity_and_all_ones():
    ident = ReesMatrixData(TRIVIAL, 2, 2, ((0, None), (None, 0)))
    an = normalize_sandwich(ident)
    assert an.normalized.sandwich == ident.sandwich and an.rank_over_q == 2
    ones = ReesMatrixData(TRIVIAL, 2, 2, ((0, 0), (0, 0)))
    assert normalize_sandwich(ones).rank_over_q == 1


def test_normalize_irregular():
    with pytest.raises(IrregularSandwich):
        normalize_sandwich(ReesMatrixData(TRIVIAL, 2, 2, ((0, None), (0, None))))


@pytest.mark.parametrize(
    "m,n,pbar,expected",
    [
        (1, 2, [[1], [1]], 1),
        (2, 2, [[1, 1], [0, 1]], 2),
        (4, 1, [[1, 1, 1, 1]], 1),
        (3, 3, [[1, 1, 0], [0, 1, 1], [1, 0, 1]], 3),
        (3, 3, [[1, 1, 0], [1, 1, 0], [0, 0, 1]], 2),
    ],
)
def test_trivialized_rank(m, n, pbar, expected):
    sandwich = tuple(tuple(0 if x else None for x in row) for row in pbar)
    assert trivialized_rank(ReesMatrixData(TRIVIAL, m, n, sandwich)) == expected


def test_rank_invariant_under_permutations():
    pbar = [[1, 1, 0], [0, 1, 1], [1, 1, 1]]
    base = None
    for rp in itertools.permutations(range(3)):
        for cp in itertools.permutations(range(3)):
            q = [[pbar[rp[j]][cp[i]] for i in range(3)] for j in range(3)]
            s = tuple(tuple(0 if x else None for x in row) for row in q)
            r = trivialized_rank(ReesMatrixData(TRIVIAL, 3, 3, s))
            base = r if base is None else base
            assert r == base


def _regular_sandwiches(G, m, n):
    entries = [None] + list(range(G.order))
    for flat in itertools.product(entries, repeat=m * n):
        P = tuple(tuple(flat[j * m:(j + 1) * m]) for j in range(n))
        d = ReesMatrixData(G, m, n, P)
        if d.regular:
            yield d


@pytest.mark.parametrize("k", [1, 2, 3])
def test_round_trip_small(k):
    G = cyclic_group(k)
    for m, n in [(1, 1), (1, 2), (2, 1), (3, 1), (1, 3)]:
        for d in _regular_sandwiches(G, m, n):
            S = rees_matrix_construct(d)
            d2 = decompose_zero_simple(S)
            assert is_isomorphic(rees_matrix_construct(d2), S)
