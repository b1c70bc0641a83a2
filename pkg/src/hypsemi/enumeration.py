"""Semigroups of order at most 4, up to isomorphism."""
from __future__ import annotations

from itertools import permutations
from typing import Iterator

from .algebra import structure_constants
from .errors import OrderTooLarge
from .semigroup import FiniteSemigroup, adjoin, validate_table

MAX_ENUMERATION_ORDER = 4


def canonical_form(table) -> tuple:
    """Lexicographically least flattened table over all relabelings."""
    n = len(table)
    best = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        flat = tuple(perm[table[inv[a]][inv[b]]] for a in range(n) for b in range(n))
        if best is None or flat < best:
            best = flat
    return best


def associative_tables(n: int) -> Iterator[list]:
    """Every associative ``n x n`` table, filled cell by cell with pruning."""
    table = [[None] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]

    def consistent():
        for i in range(n):
            for j in range(n):
                ij = table[i][j]
                if ij is None:
                    continue
                for k in range(n):
                    jk = table[j][k]
                    if jk is None:
                        continue
                    left, right = table[ij][k], table[i][jk]
                    if left is not None and right is not None and left != right:
                        return False
        return True

    def rec(pos):
        if pos == len(cells):
            yield [row[:] for row in table]
            return
        i, j = cells[pos]
        for v in range(n):
            table[i][j] = v
            if consistent():
                yield from rec(pos + 1)
        table[i][j] = None

    yield from rec(0)


def _unital_q0(S: FiniteSemigroup) -> bool:
    return structure_constants(adjoin(S, "zero")).identity_coords is not None


def enumerate_semigroups(order: int, with_zero: bool = False, unital_only: bool = False) -> list:
    """Semigroups of the given order up to isomorphism, in canonical order.

    ``unital_only`` keeps those whose contracted algebra (with a zero adjoined
    when absent) has an identity.
    """
    if order > MAX_ENUMERATION_ORDER:
        raise OrderTooLarge(f"enumeration is capped at order {MAX_ENUMERATION_ORDER}")
    out = []
    if order < 1:
        return out
    forms = {canonical_form(t) for t in associative_tables(order)}
    for flat in sorted(forms):
        table = [list(flat[r * order:(r + 1) * order]) for r in range(order)]
        S = validate_table(table)
        if with_zero and S.zero is None:
            continue
        if unital_only and not _unital_q0(S):
            continue
        out.append(S)
    return out
