"""Finite semigroups as multiplication tables.

Elements are the indices ``0..order-1``; ``table[i][j]`` is the index of the
product of element ``i`` and element ``j``. A zero (absorbing element) and an
identity are ordinary elements flagged by index.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (
    IdentityNotNeutral,
    IndexOutOfRange,
    InvalidInput,
    IrregularSandwich,
    NotAGroup,
    NotAssociative,
    OrderTooLarge,
    ZeroNotAbsorbing,
)

ISOMORPHISM_SEARCH_BOUND = 16


@dataclass(frozen=True)
class FiniteSemigroup:
    table: tuple
    zero: Optional[int] = None
    identity: Optional[int] = None
    names: Optional[tuple] = None

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def label(self, i: int) -> str:
        if self.names is not None:
            return str(self.names[i])
        return str(i)

    def idempotents(self) -> list[int]:
        return [x for x in range(self.order) if self.table[x][x] == x]

    def nonzero(self) -> list[int]:
        return [x for x in range(self.order) if x != self.zero]

    def relabel(self, perm: Sequence[int]) -> FiniteSemigroup:
        """Copy with element ``x`` renamed to ``perm[x]``."""
        n = self.order
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        table = tuple(
            tuple(perm[self.table[inv[a]][inv[b]]] for b in range(n)) for a in range(n)
        )
        names = None if self.names is None else tuple(self.names[inv[a]] for a in range(n))
        return FiniteSemigroup(
            table,
            None if self.zero is None else perm[self.zero],
            None if self.identity is None else perm[self.identity],
            names,
        )

    def to_dict(self) -> dict:
        d = {"order": self.order, "table": [list(r) for r in self.table]}
        if self.zero is not None:
            d["zero"] = self.zero
        if self.identity is not None:
            d["identity"] = self.identity
        if self.names is not None:
            d["names"] = list(self.names)
        return d


def find_associativity_failure(table) -> Optional[tuple]:
    n = len(table)
    for i in range(n):
        ti = table[i]
        for j in range(n):
            row_ij = table[ti[j]]
            tj = table[j]
            for k in range(n):
                if row_ij[k] != ti[tj[k]]:
                    return (i, j, k)
    return None


def _detect_zero(table):
    n = len(table)
    for z in range(n):
        if all(table[z][x] == z and table[x][z] == z for x in range(n)):
            return z
    return None


def _detect_identity(table):
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def validate_table(table, zero=None, identity=None, names=None) -> FiniteSemigroup:
    """Check a raw table and return a :class:`FiniteSemigroup`.

    Missing zero/identity are auto-detected. Raises ``NotAssociative`` with a
    witness triple, ``IndexOutOfRange``, ``ZeroNotAbsorbing`` or
    ``IdentityNotNeutral``.
    """
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 0:
        raise InvalidInput("a semigroup needs at least one element")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InvalidInput(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidInput(f"entry table[{i}][{j}] = {v!r} is not an integer")
            if not 0 <= v < n:
                raise IndexOutOfRange(i, j, v, n)
    t = tuple(tuple(r) for r in rows)
    bad = find_associativity_failure(t)
    if bad is not None:
        raise NotAssociative(bad)

    if zero is None:
        zero = _detect_zero(t)
    else:
        if not 0 <= zero < n:
            raise ZeroNotAbsorbing(f"zero index {zero} out of range")
        for x in range(n):
            if t[zero][x] != zero or t[x][zero] != zero:
                raise ZeroNotAbsorbing(f"element {zero} is not absorbing (fails against {x})")
    if identity is None:
        identity = _detect_identity(t)
    else:
        if not 0 <= identity < n:
            raise IdentityNotNeutral(f"identity index {identity} out of range")
        for x in range(n):
            if t[identity][x] != x or t[x][identity] != x:
                raise IdentityNotNeutral(f"element {identity} is not neutral (fails against {x})")
    if names is not None:
        names = tuple(str(s) for s in names)
        if len(names) != n:
            raise InvalidInput(f"{len(names)} names given for {n} elements")
    return FiniteSemigroup(t, zero, identity, names)


def adjoin(S: FiniteSemigroup, kind: str, force: bool = False) -> FiniteSemigroup:
    """Adjoin a new zero (``kind="zero"``) or identity (``kind="identity"``).

    Returns ``S`` itself when it already has one, unless ``force`` is set (the
    old element is then replaced, e.g. the trivial group ``{1}``, whose single
    element is also absorbing, becomes ``{1, θ}``).
    """
    if kind not in ("zero", "identity"):
        raise ValueError(f"kind must be 'zero' or 'identity', not {kind!r}")
    if not force and kind == "zero" and S.zero is not None:
        return S
    if not force and kind == "identity" and S.identity is not None:
        return S
    n = S.order
    if kind == "zero":
        table = [list(r) + [n] for r in S.table] + [[n] * (n + 1)]
        zero, identity = n, S.identity
    else:
        table = [list(r) + [i] for i, r in enumerate(S.table)] + [list(range(n + 1))]
        zero, identity = S.zero, n
    names = None
    if S.names is not None:
        names = S.names + (("θ",) if kind == "zero" else ("1",))
    return FiniteSemigroup(tuple(tuple(r) for r in table), zero, identity, names)


def zero_direct_union(A: FiniteSemigroup, B: FiniteSemigroup) -> FiniteSemigroup:
    """0-direct union: nonzero parts of ``A`` and ``B`` glued at a shared zero.

    Products between the two parts are zero.
    """
    A = adjoin(A, "zero")
    B = adjoin(B, "zero")
    a_nz, b_nz = A.nonzero(), B.nonzero()
    new_a = {x: i for i, x in enumerate(a_nz)}
    new_b = {x: len(a_nz) + i for i, x in enumerate(b_nz)}
    z = len(a_nz) + len(b_nz)
    new_a[A.zero] = z
    new_b[B.zero] = z
    table = [[z] * (z + 1) for _ in range(z + 1)]
    for x in a_nz:
        for y in a_nz:
            table[new_a[x]][new_a[y]] = new_a[A.table[x][y]]
    for x in b_nz:
        for y in b_nz:
            table[new_b[x]][new_b[y]] = new_b[B.table[x][y]]
    names = None
    if A.names is not None or B.names is not None:
        names = [A.label(x) for x in a_nz] + [B.label(x) for x in b_nz] + ["θ"]
    return validate_table(table, zero=z, names=names)


def is_group(S: FiniteSemigroup) -> bool:
    e = S.identity
    if e is None:
        return False
    return all(e in row for row in S.table) and all(
        any(S.table[y][x] == e for y in range(S.order)) for x in range(S.order)
    )


def require_group(S: FiniteSemigroup) -> None:
    if not is_group(S):
        raise NotAGroup("table does not define a group")


def group_inverse(G: FiniteSemigroup, g: int) -> int:
    return G.table[g].index(G.identity)


@dataclass(frozen=True)
class ReesMatrixData:
    """Rees matrix data ``M0(G; m, n; P)``.

    ``sandwich`` is the ``n x m`` matrix P; entries are indices into ``group``
    or ``None`` for the zero.
    """

    group: FiniteSemigroup
    m: int
    n: int
    sandwich: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "sandwich", tuple(tuple(r) for r in self.sandwich))

    @property
    def regular(self) -> bool:
        P = self.sandwich
        rows_ok = all(any(x is not None for x in row) for row in P)
        cols_ok = all(any(P[j][i] is not None for j in range(self.n)) for i in range(self.m))
        return rows_ok and cols_ok

    @property
    def trivial_group(self) -> bool:
        return self.group.order == 1

    def trivialized(self) -> tuple:
        return tuple(tuple(0 if x is None else 1 for x in row) for row in self.sandwich)

    def to_dict(self) -> dict:
        return {
            "groupOrder": self.group.order,
            "group": self.group.to_dict(),
            "m": self.m,
            "n": self.n,
            "sandwich": [[None if x is None else x for x in row] for row in self.sandwich],
        }


def check_rees_data(data: ReesMatrixData) -> None:
    require_group(data.group)
    P = data.sandwich
    if data.m < 1 or data.n < 1:
        raise InvalidInput("m and n must be positive")
    if len(P) != data.n or any(len(row) != data.m for row in P):
        raise InvalidInput(f"sandwich must be {data.n}x{data.m}")
    for row in P:
        for x in row:
            if x is not None and not 0 <= x < data.group.order:
                raise InvalidInput(f"sandwich entry {x!r} is not a group element")
    if not data.regular:
        raise IrregularSandwich("every row and column of the sandwich matrix needs a nonzero entry")


def rees_element_index(data: ReesMatrixData, g: int, i: int, j: int) -> int:
    """Index of ``(g, i, j)`` (0-based ``i``, ``j``) in the constructed semigroup."""
    return (i * data.n + j) * data.group.order + g


def rees_matrix_construct(data: ReesMatrixData) -> FiniteSemigroup:
    """Build ``M0(G; m, n; P)`` with ``(g,i,j)(h,k,l) = (g p_{j,k} h, i, l)``.

    The zero is the last element.
    """
    check_rees_data(data)
    G, m, n, P = data.group, data.m, data.n, data.sandwich
    k = G.order
    zero = k * m * n
    elems = [(g, i, j) for i in range(m) for j in range(n) for g in range(k)]
    table = [[zero] * (zero + 1) for _ in range(zero + 1)]
    for a, (g, i, j) in enumerate(elems):
        row = table[a]
        for b, (h, kk, l) in enumerate(elems):
            p = P[j][kk]
            if p is not None:
                row[b] = rees_element_index(data, G.table[G.table[g][p]][h], i, l)
    names = [f"({G.label(g)},{i + 1},{j + 1})" for g, i, j in elems] + ["θ"]
    return validate_table(table, zero=zero, names=names)


# -- isomorphism -------------------------------------------------------------

def _element_profiles(S: FiniteSemigroup):
    t, n = S.table, S.order
    profiles = []
    for x in range(n):
        # index and period of the monogenic subsemigroup
        seen = {}
        p, k = x, 1
        while p not in seen:
            seen[p] = k
            p = t[p][x]
            k += 1
        index, period = seen[p], k - seen[p]
        profiles.append(
            (
                t[x][x] == x,
                x == S.zero,
                x == S.identity,
                index,
                period,
                len(set(t[x])),
                len({t[y][x] for y in range(n)}),
                sum(t[x][y] == y for y in range(n)),
                sum(t[y][x] == y for y in range(n)),
                sum(t[y][y] == x for y in range(n)),
            )
        )
    return profiles


def find_isomorphism(A: FiniteSemigroup, B: FiniteSemigroup, max_order=ISOMORPHISM_SEARCH_BOUND):
    """Return a list ``phi`` with ``phi[a*b] = phi[a]*phi[b]``, or ``None``.

    Backtracking over elements of ``A`` with profile-based pruning; each
    assignment is closed under products before branching further.
    """
    n = A.order
    if max(n, B.order) > max_order:
        raise OrderTooLarge(f"isomorphism search is bounded at order {max_order}")
    if n != B.order:
        return None
    pa, pb = _element_profiles(A), _element_profiles(B)
    if Counter(pa) != Counter(pb):
        return None
    if sorted(Counter(r).most_common()[0][1] for r in A.table) != sorted(
        Counter(r).most_common()[0][1] for r in B.table
    ):
        return None
    candidates = [[y for y in range(n) if pb[y] == pa[x]] for x in range(n)]
    ta, tb = A.table, B.table

    def extend(phi, used, x, y):
        # assign x -> y and close under multiplication; returns list of new
        # assignments or None on conflict
        added = []
        stack = [(x, y)]
        while stack:
            a, b = stack.pop()
            if phi[a] is not None:
                if phi[a] != b:
                    return _undo(phi, used, added)
                continue
            if b in used or pa[a] != pb[b]:
                return _undo(phi, used, added)
            phi[a] = b
            used.add(b)
            added.append(a)
            for c in range(n):
                fc = phi[c]
                if fc is None:
                    continue
                stack.append((ta[a][c], tb[b][fc]))
                stack.append((ta[c][a], tb[fc][b]))
        return added

    def _undo(phi, used, added):
        for a in added:
            used.discard(phi[a])
            phi[a] = None
        return None

    order = sorted(range(n), key=lambda x: len(candidates[x]))
    phi = [None] * n
    used = set()

    def search(pos):
        while pos < n and phi[order[pos]] is not None:
            pos += 1
        if pos == n:
            return True
        x = order[pos]
        for y in candidates[x]:
            if y in used:
                continue
            added = extend(phi, used, x, y)
            if added is None:
                continue
            if search(pos + 1):
                return True
            _undo(phi, used, added)
        return False

    if not search(0):
        return None
    for a in range(n):
        for b in range(n):
            if phi[ta[a][b]] != tb[phi[a]][phi[b]]:
                raise AssertionError("isomorphism search produced a non-homomorphism")
    return phi


def is_isomorphic(A: FiniteSemigroup, B: FiniteSemigroup, max_order=ISOMORPHISM_SEARCH_BOUND) -> bool:
    return find_isomorphism(A, B, max_order=max_order) is not None
