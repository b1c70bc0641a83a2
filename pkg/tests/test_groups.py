import random
from collections import Counter

import pytest

from hypsemi import fingerprint, is_higman, recognize_exceptional_group
from hypsemi.catalog import EXCEPTIONAL_GROUPS, HIGMAN_CORPUS, catalog, get
from hypsemi.errors import NotAGroup
from hypsemi.groups import (
    alternating_group_4,
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    group_from_permutations,
)
from hypsemi.catalog import t_semigroup

GROUPS = sorted(name for name, e in catalog().items() if e.is_group)


def brute_orders(G):
    out = []
    for g in range(G.order):
        x, k = g, 1
        while x != G.identity:
            x, k = G.table[x][g], k + 1
        out.append(k)
    return Counter(out)


def brute_hamiltonian(G):
    # every subgroup normal, checked on all subgroups generated by <= 2 elements
    n, t = G.order, G.table
    inv = [t[g].index(G.identity) for g in range(n)]

    def gen(gens):
        H = {G.identity} | set(gens)
        while True:
            new = {t[a][b] for a in H for b in H} | H
            if new == H:
                return H
            H = new

    subs = {frozenset(gen((a, b))) for a in range(n) for b in range(n)}
    normal = all({t[t[g][h]][inv[g]] for h in H} == H for H in subs for g in range(n))
    abelian = all(t[a][b] == t[b][a] for a in range(n) for b in range(n))
    return normal and not abelian and (n & (n - 1)) == 0


def test_q8_fingerprint():
    fp = fingerprint(dicyclic_group(2))
    assert (fp.order, fp.abelian, fp.exponent, fp.dedekind) == (8, False, 4, True)
    assert dict(fp.order_multiset)[2] == 1 == brute_orders(dicyclic_group(2))[2]
    assert fp.label == "Q8"


def test_d4_fingerprint():
    D4 = dihedral_group(4)
    fp = fingerprint(D4)
    assert (fp.order, fp.abelian, fp.exponent, fp.dedekind) == (8, False, 4, False)
    assert dict(fp.order_multiset)[2] == 5 == brute_orders(D4)[2]


def test_trivial_fingerprint():
    fp = fingerprint(cyclic_group(1))
    assert (fp.order, fp.abelian, fp.exponent) == (1, True, 1)


def test_not_a_group():
    with pytest.raises(NotAGroup):
        fingerprint(t_semigroup())
    with pytest.raises(NotAGroup):
        is_higman(t_semigroup())


@pytest.mark.parametrize("name", GROUPS)
def test_fingerprint_invariants(name):
    G = get(name)
    fp = fingerprint(G)
    assert fp.order % fp.exponent == 0
    assert sum(c for _, c in fp.order_multiset) == fp.order
    assert Counter(dict(fp.order_multiset)) == brute_orders(G)
    if fp.abelian:
        assert fp.dedekind


@pytest.mark.parametrize("name", GROUPS)
def test_fingerprint_relabel_invariant(name):
    G = get(name)
    perm = list(range(G.order))
    random.Random(name).shuffle(perm)
    assert fingerprint(G) == fingerprint(G.relabel(perm))


def test_higman_examples():
    assert is_higman(cyclic_group(6))
    assert is_higman(dicyclic_group(2))
    assert not is_higman(cyclic_group(8))


@pytest.mark.parametrize("name", GROUPS)
def test_higman_matches_definition(name):
    G = get(name)
    n, t = G.order, G.table
    abelian = all(t[a][b] == t[b][a] for a in range(n) for b in range(n))
    exps = brute_orders(G)
    import math
    exponent = math.lcm(*exps)
    by_definition = (abelian and (4 % exponent == 0 or 6 % exponent == 0)) or brute_hamiltonian(G)
    assert is_higman(G) == by_definition
    assert is_higman(G) == (name in HIGMAN_CORPUS)


def test_recognize_examples():
    assert recognize_exceptional_group(cyclic_group(5)) == "C5"
    assert recognize_exceptional_group(dicyclic_group(3)) == "Q12"
    assert recognize_exceptional_group(alternating_group_4()) is None
    # A4 fingerprint: order 12 with three involutions
    fp = fingerprint(alternating_group_4())
    assert dict(fp.order_multiset)[2] == 3


def test_dicyclic_presentation():
    # a = (1,0), b = (0,1): a^6 = 1, b^2 = a^3, b a b^-1 = a^-1
    Q = dicyclic_group(3)
    a, b, e = 1, 6, 0
    t = Q.table

    def power(x, k):
        y = e
        for _ in range(k):
            y = t[y][x]
        return y

    assert power(a, 6) == e
    assert power(b, 2) == power(a, 3)
    b_inv = t[b].index(e)
    assert t[t[b][a]][b_inv] == power(a, 5)


@pytest.mark.parametrize("name", GROUPS)
def test_exceptional_groups_are_not_higman(name):
    G = get(name)
    label = recognize_exceptional_group(G)
    assert (label is not None) == (name in EXCEPTIONAL_GROUPS)
    if label is not None:
        assert label == name
        assert not is_higman(G)


def test_recognition_survives_relabeling():
    for name in EXCEPTIONAL_GROUPS:
        G = get(name)
        perm = list(range(G.order))
        random.Random(7).shuffle(perm)
        assert recognize_exceptional_group(G.relabel(perm)) == name


def test_s3_from_permutations_matches_d3():
    S3 = group_from_permutations([(1, 0, 2), (1, 2, 0)])
    assert recognize_exceptional_group(S3) == "S3"
    assert recognize_exceptional_group(dihedral_group(3)) == "S3"
