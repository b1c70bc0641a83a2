"""Finite groups given as tables: constructors, fingerprints, Higman test.

The exceptional groups recognized here are the non-Higman groups whose
rational group algebra is hyperbolic: C5, C8, C12 (abelian) and S3, D4, Q12,
C4:C4 (nonabelian).
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Optional

from .semigroup import FiniteSemigroup, find_isomorphism, group_inverse, require_group, validate_table


# -- constructors ------------------------------------------------------------

def _from_elements(elements, mul, names=None) -> FiniteSemigroup:
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return validate_table(table, names=names)


def cyclic_group(n: int) -> FiniteSemigroup:
    return _from_elements(list(range(n)), lambda a, b: (a + b) % n, names=[f"a^{k}" for k in range(n)])


def dihedral_group(n: int) -> FiniteSemigroup:
    """Symmetries of the n-gon, order 2n: elements r^k s^e."""
    elems = [(k, e) for e in range(2) for k in range(n)]

    def mul(x, y):
        (k, e), (l, f) = x, y
        return ((k + (-1) ** e * l) % n, (e + f) % 2)

    return _from_elements(elems, mul, names=[f"r^{k}s^{e}" for k, e in elems])


def dicyclic_group(n: int) -> FiniteSemigroup:
    """<a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1>, order 4n."""
    m = 2 * n
    elems = [(k, e) for e in range(2) for k in range(m)]

    def mul(x, y):
        (k, e), (l, f) = x, y
        k2 = k + (-1) ** e * l
        if e + f == 2:
            return ((k2 + n) % m, 0)
        return (k2 % m, e + f)

    return _from_elements(elems, mul, names=[f"a^{k}b^{e}" for k, e in elems])


def c4_semidirect_c4() -> FiniteSemigroup:
    """<a, b | a^4 = b^4 = 1, b a b^-1 = a^-1>."""
    elems = [(k, e) for e in range(4) for k in range(4)]

    def mul(x, y):
        (k, e), (l, f) = x, y
        return ((k + (-1) ** e * l) % 4, (e + f) % 4)

    return _from_elements(elems, mul, names=[f"a^{k}b^{e}" for k, e in elems])


def group_from_permutations(perms) -> FiniteSemigroup:
    """Group generated by permutations (tuples of images)."""
    perms = [tuple(p) for p in perms]
    deg = len(perms[0])
    ident = tuple(range(deg))
    seen = [ident]
    frontier = [ident]
    known = {ident}
    while frontier:
        nxt = []
        for x in frontier:
            for g in perms:
                y = tuple(g[x[i]] for i in range(deg))
                if y not in known:
                    known.add(y)
                    seen.append(y)
                    nxt.append(y)
        frontier = nxt
    # (a*b)(i) = a(b(i))
    return _from_elements(seen, lambda a, b: tuple(a[b[i]] for i in range(deg)))


def symmetric_group(n: int) -> FiniteSemigroup:
    if n == 1:
        return cyclic_group(1)
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return group_from_permutations(gens)


def alternating_group_4() -> FiniteSemigroup:
    return group_from_permutations([(1, 2, 0, 3), (0, 2, 3, 1)])


def direct_product(*groups: FiniteSemigroup) -> FiniteSemigroup:
    def pair(A, B):
        elems = [(a, b) for a in range(A.order) for b in range(B.order)]
        return _from_elements(elems, lambda x, y: (A.table[x[0]][y[0]], B.table[x[1]][y[1]]))

    return reduce(pair, groups)


def abelian_group(*cyclic_orders: int) -> FiniteSemigroup:
    return direct_product(*(cyclic_group(k) for k in cyclic_orders))


# -- invariants --------------------------------------------------------------

def element_order(G: FiniteSemigroup, g: int) -> int:
    e, x, k = G.identity, g, 1
    while x != e:
        x = G.table[x][g]
        k += 1
    return k


def cyclic_subgroup(G: FiniteSemigroup, a: int) -> set:
    out, x = {G.identity}, a
    while x not in out:
        out.add(x)
        x = G.table[x][a]
    return out


def is_abelian(G: FiniteSemigroup) -> bool:
    t = G.table
    return all(t[a][b] == t[b][a] for a in range(G.order) for b in range(a))


def is_dedekind(G: FiniteSemigroup) -> bool:
    """Every cyclic subgroup normal: g a g^-1 ∈ <a> for all g, a."""
    t = G.table
    inv = [group_inverse(G, g) for g in range(G.order)]
    for a in range(G.order):
        cyc = cyclic_subgroup(G, a)
        for g in range(G.order):
            if t[t[g][a]][inv[g]] not in cyc:
                return False
    return True


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    abelian: bool
    exponent: int
    order_multiset: tuple  # sorted (element order, count) pairs
    center_order: int
    dedekind: bool
    label: Optional[str] = None

    def key(self) -> tuple:
        return (self.order, self.abelian, self.exponent, self.order_multiset, self.center_order, self.dedekind)


def _fingerprint(G: FiniteSemigroup) -> GroupFingerprint:
    require_group(G)
    orders = [element_order(G, g) for g in range(G.order)]
    t = G.table
    center = [z for z in range(G.order) if all(t[z][g] == t[g][z] for g in range(G.order))]
    return GroupFingerprint(
        order=G.order,
        abelian=len(center) == G.order,
        exponent=reduce(math.lcm, orders, 1),
        order_multiset=tuple(sorted(Counter(orders).items())),
        center_order=len(center),
        dedekind=is_dedekind(G),
    )


def fingerprint(G: FiniteSemigroup) -> GroupFingerprint:
    """Isomorphism invariants of ``G``; ``label`` names a matching catalog group."""
    fp = _fingerprint(G)
    for name, (H, hfp) in named_groups().items():
        if hfp.key() == fp.key() and find_isomorphism(G, H, max_order=max(16, G.order)) is not None:
            return GroupFingerprint(**{**fp.__dict__, "label": name})
    return fp


def _is_power_of_two(k: int) -> bool:
    return k & (k - 1) == 0


def is_higman(G: FiniteSemigroup) -> bool:
    """Abelian of exponent dividing 4 or 6, or a Hamiltonian 2-group.

    Hamiltonian 2-groups are detected as nonabelian Dedekind groups of 2-power
    order (Dedekind's classification makes these exactly Q8 x C2^k).
    """
    fp = _fingerprint(G)
    if fp.abelian:
        return 4 % fp.exponent == 0 or 6 % fp.exponent == 0
    return fp.dedekind and _is_power_of_two(fp.order)


EXCEPTIONAL_ABELIAN = ("C5", "C8", "C12")
EXCEPTIONAL_NONABELIAN = ("S3", "D4", "Q12", "C4xC4")


@lru_cache(maxsize=None)
def named_groups() -> dict:
    """Catalog groups keyed by name, each with its fingerprint."""
    groups = {
        "C1": cyclic_group(1),
        "C5": cyclic_group(5),
        "C8": cyclic_group(8),
        "C12": cyclic_group(12),
        "S3": symmetric_group(3),
        "D4": dihedral_group(4),
        "Q8": dicyclic_group(2),
        "Q12": dicyclic_group(3),
        "C4xC4": c4_semidirect_c4(),
    }
    return {name: (G, _fingerprint(G)) for name, G in groups.items()}


def recognize_exceptional_group(G: FiniteSemigroup) -> Optional[str]:
    """Catalog label if ``G`` is one of the seven exceptional groups."""
    fp = _fingerprint(G)
    for name in EXCEPTIONAL_ABELIAN + EXCEPTIONAL_NONABELIAN:
        H, hfp = named_groups()[name]
        if hfp.key() != fp.key():
            continue
        if find_isomorphism(G, H, max_order=max(16, G.order)) is not None:
            return name
    return None

