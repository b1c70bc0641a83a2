import random

import pytest

from hypsemi import adjoin, compute_green, is_isomorphic, principal_factors, principal_series
from hypsemi.catalog import catalog, get, null_semigroup, rees_over_trivial, t_semigroup
from hypsemi.errors import NoZero
from hypsemi.green import FactorKind, linear_extensions, random_linear_extension
from hypsemi.groups import cyclic_group, symmetric_group


def _sets(classes):
    return {frozenset(c) for c in classes}


def brute_force_ideals(S):
    n = S.order
    right = [{a} | {S.table[a][s] for s in range(n)} for a in range(n)]
    left = [{a} | {S.table[s][a] for s in range(n)} for a in range(n)]
    both = [{a} | {S.table[S.table[x][a]][y] for x in range(n) for y in range(n)}
            | {S.table[x][a] for x in range(n)} | {S.table[a][y] for y in range(n)} for a in range(n)]
    return right, left, both


def test_green_of_t():
    g = compute_green(t_semigroup())  # e=0, f=1, θ=2
    assert _sets(g.r_classes) == {frozenset({0, 1}), frozenset({2})}
    assert _sets(g.l_classes) == {frozenset({0}), frozenset({1}), frozenset({2})}
    assert _sets(g.j_classes) == {frozenset({0, 1}), frozenset({2})}


def test_green_of_brandt():
    B2 = rees_over_trivial(2, 2, [[1, 0], [0, 1]])
    g = compute_green(B2)
    nz = [c for c in g.j_classes if B2.zero not in c]
    assert nz == [frozenset(range(4))]
    assert len([c for c in g.r_classes if B2.zero not in c]) == 2
    assert len([c for c in g.l_classes if B2.zero not in c]) == 2


def test_group_single_j_class():
    g = compute_green(symmetric_group(3))
    assert len(g.j_classes) == 1 and len(g.h_classes) == 1


@pytest.mark.parametrize("name", sorted(catalog()))
def test_green_partitions_refine(name):
    S = get(name)
    g = compute_green(S)
    right, left, both = brute_force_ideals(S)
    for cls in g.r_classes:
        assert len({frozenset(right[x]) for x in cls}) == 1
    for h in g.h_classes:
        assert any(h <= r for r in g.r_classes) and any(h <= l for l in g.l_classes)
    for r in list(g.r_classes) + list(g.l_classes):
        assert any(r <= j for j in g.j_classes)
    for cls in g.j_classes:
        assert len({frozenset(both[x]) for x in cls}) == 1
    # j order is a partial order
    k = len(g.j_classes)
    for a in range(k):
        for b in range(k):
            if a != b and g.j_leq(a, b):
                assert not g.j_leq(b, a)
            for c in range(k):
                if g.j_leq(a, b) and g.j_leq(b, c):
                    assert g.j_leq(a, c)
    if S.zero is not None:
        z = g.j_class_id(S.zero)
        assert all(g.j_leq(z, c) for c in range(k))


def test_principal_series_t1(t1):
    series = principal_series(t1)
    assert series == [frozenset({3}), frozenset({1, 2, 3}), frozenset({0, 1, 2, 3})]


def test_principal_series_c5_with_zero():
    S = adjoin(cyclic_group(5), "zero")
    assert [len(s) for s in principal_series(S)] == [1, 6]


def test_principal_series_b2_with_identity():
    S = get("B2-1")
    assert [len(s) for s in principal_series(S)] == [1, 5, 6]


def test_principal_series_needs_zero():
    with pytest.raises(NoZero):
        principal_series(cyclic_group(3))


@pytest.mark.parametrize("name", sorted(catalog()))
def test_series_members_are_ideals(name):
    S = adjoin(get(name), "zero")
    for I in principal_series(S):
        assert all(S.table[s][x] in I and S.table[x][s] in I for s in range(S.order) for x in I)


def test_factors_t1(t1):
    fs = principal_factors(t1)
    assert [f.kind for f in fs] == [FactorKind.ZERO_SIMPLE, FactorKind.GROUP]
    d = fs[0].rees_data
    assert (d.group.order, d.m, d.n) == (1, 1, 2)
    assert fs[1].rees_data.group.order == 1


def test_two_element_null_semigroup_gives_two_null_factors():
    fs = principal_factors(null_semigroup(2))
    assert [f.kind for f in fs] == [FactorKind.NULL, FactorKind.NULL]
    assert [f.nonzero_count for f in fs] == [1, 1]


def test_factors_s3_with_zero():
    fs = principal_factors(symmetric_group(3))
    assert len(fs) == 1 and fs[0].kind is FactorKind.GROUP
    assert fs[0].rees_data.group.order == 6


@pytest.mark.parametrize("name", sorted(catalog()))
def test_factor_counts_and_nullity(name):
    S = adjoin(get(name), "zero")
    fs = principal_factors(S)
    assert sum(f.nonzero_count for f in fs) == S.order - 1
    for f in fs:
        Q = f.as_semigroup
        squares = {Q.table[x][y] for x in range(Q.order) for y in range(Q.order)}
        assert (f.kind is FactorKind.NULL) == (squares == {Q.zero})
        if f.kind is FactorKind.GROUP:
            assert f.rees_data.m == f.rees_data.n == 1
        if f.kind is FactorKind.ZERO_SIMPLE:
            d = f.rees_data
            assert d.regular and d.group.order * d.m * d.n == f.nonzero_count


def _factor_classes(S, ext):
    return [f.as_semigroup for f in principal_factors(S, ext)]


@pytest.mark.parametrize("name", sorted(catalog()))
def test_factors_invariant_under_linear_extension(name):
    S = adjoin(get(name), "zero")
    g = compute_green(S)
    rng = random.Random(name)
    base = _factor_classes(S, None)
    for _ in range(3):
        other = _factor_classes(S, random_linear_extension(g, rng))
        assert len(other) == len(base)
        unmatched = list(other)
        for F in base:
            hit = next(i for i, G in enumerate(unmatched) if is_isomorphic(F, G, max_order=17))
            unmatched.pop(hit)


def test_linear_extensions_of_antichain():
    S = adjoin(null_semigroup(3), "identity")
    exts = list(linear_extensions(compute_green(S)))
    # θ first, identity last, three incomparable null classes in between
    assert len(exts) == 6
