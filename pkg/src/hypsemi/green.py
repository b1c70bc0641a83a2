"""Green's relations, principal series and principal factors."""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Sequence

from .errors import InvalidInput, NoZero
from .semigroup import FiniteSemigroup, ReesMatrixData, adjoin, validate_table


def _partition(keys) -> tuple:
    groups = {}
    for x, k in enumerate(keys):
        groups.setdefault(k, []).append(x)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


@dataclass(frozen=True)
class GreenStructure:
    semigroup: FiniteSemigroup
    r_classes: tuple
    l_classes: tuple
    h_classes: tuple
    j_classes: tuple
    # j_below[c] = ids of J-classes strictly below class c
    j_below: tuple
    principal_ideals: tuple

    def j_class_id(self, x: int) -> int:
        for c, cls in enumerate(self.j_classes):
            if x in cls:
                return c
        raise KeyError(x)

    def j_leq(self, a: int, b: int) -> bool:
        """Is J-class ``a`` below or equal to J-class ``b``?"""
        return a == b or a in self.j_below[b]

    def r_class_of(self, x: int) -> frozenset:
        return next(c for c in self.r_classes if x in c)

    def l_class_of(self, x: int) -> frozenset:
        return next(c for c in self.l_classes if x in c)

    def h_class_of(self, x: int) -> frozenset:
        return next(c for c in self.h_classes if x in c)


def compute_green(S: FiniteSemigroup) -> GreenStructure:
    t, n = S.table, S.order
    # aS^1, S^1a, S^1aS^1 with the adjoined identity accounted for by {a}
    right = [frozenset(t[a]) | {a} for a in range(n)]
    left = [frozenset(t[y][a] for y in range(n)) | {a} for a in range(n)]
    two_sided = [frozenset(z for x in left[a] for z in right[x]) for a in range(n)]
    r = _partition(right)
    l = _partition(left)
    h = _partition(list(zip(right, left)))
    j = _partition(two_sided)
    ideal_of = [two_sided[min(c)] for c in j]
    below = tuple(
        frozenset(d for d in range(len(j)) if d != c and ideal_of[d] <= ideal_of[c])
        for c in range(len(j))
    )
    return GreenStructure(S, r, l, h, j, below, tuple(ideal_of))


def _check_extension(green: GreenStructure, extension: Sequence[int]) -> None:
    if sorted(extension) != list(range(len(green.j_classes))):
        raise InvalidInput("extension must list every J-class id exactly once")
    pos = {c: i for i, c in enumerate(extension)}
    for c, below in enumerate(green.j_below):
        if any(pos[d] > pos[c] for d in below):
            raise InvalidInput("extension is not a linear extension of the J-order")


def linear_extensions(green: GreenStructure) -> Iterator[list]:
    """All bottom-up linear extensions of the J-order, lexicographic by class id.

    Class ids are ordered by minimum element, so the first one produced is the
    default used by :func:`principal_series`.
    """
    k = len(green.j_classes)

    def rec(chosen, placed):
        if len(chosen) == k:
            yield list(chosen)
            return
        for c in range(k):
            if c not in placed and green.j_below[c] <= placed:
                chosen.append(c)
                yield from rec(chosen, placed | {c})
                chosen.pop()

    yield from rec([], frozenset())


def random_linear_extension(green: GreenStructure, rng: random.Random) -> list:
    k = len(green.j_classes)
    out, placed = [], set()
    while len(out) < k:
        ready = [c for c in range(k) if c not in placed and green.j_below[c] <= placed]
        c = rng.choice(ready)
        out.append(c)
        placed.add(c)
    return out


def default_extension(green: GreenStructure) -> list:
    return next(linear_extensions(green))


def principal_series(S: FiniteSemigroup, extension: Optional[Sequence[int]] = None, green=None) -> list:
    """Ideals ``{θ} = S_n ⊂ ... ⊂ S_1 = S`` listed bottom-up.

    Consecutive ideals differ by one J-class, added in the order given by
    ``extension`` (a bottom-up linear extension of J-class ids).
    """
    if S.zero is None:
        raise NoZero("principal series requires a zero; adjoin one first")
    green = green or compute_green(S)
    if extension is None:
        extension = default_extension(green)
    else:
        _check_extension(green, extension)
    series, current = [], frozenset()
    for c in extension:
        current = current | green.j_classes[c]
        series.append(current)
    return series


class FactorKind(str, Enum):
    NULL = "null"
    GROUP = "group"
    ZERO_SIMPLE = "zero-simple"


@dataclass(frozen=True)
class PrincipalFactor:
    kind: FactorKind
    elements: tuple
    as_semigroup: FiniteSemigroup
    rees_data: Optional[ReesMatrixData]
    nonzero_count: int
    # the J-class id inside the parent's GreenStructure
    j_class: int = -1

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind.value,
            "elements": list(self.elements),
            "nonzeroCount": self.nonzero_count,
        }
        if self.rees_data is not None:
            d["reesData"] = self.rees_data.to_dict()
        return d


def rees_quotient(S: FiniteSemigroup, j_class) -> FiniteSemigroup:
    """The principal factor ``J ∪ {θ}``: products leaving ``J`` become θ."""
    elems = sorted(j_class)
    index = {x: i for i, x in enumerate(elems)}
    z = len(elems)
    table = [[z] * (z + 1) for _ in range(z + 1)]
    for x in elems:
        for y in elems:
            p = S.table[x][y]
            if p in index:
                table[index[x]][index[y]] = index[p]
    names = [S.label(x) for x in elems] + ["θ"]
    return validate_table(table, zero=z, names=names)


def principal_factors(S: FiniteSemigroup, extension: Optional[Sequence[int]] = None) -> list:
    """One :class:`PrincipalFactor` per nonzero J-class, bottom-up.

    A zero is adjoined when ``S`` has none; element indices then refer to the
    adjoined semigroup (the new zero is the last index).
    """
    from .rees import decompose_zero_simple

    S = adjoin(S, "zero")
    green = compute_green(S)
    series = principal_series(S, extension, green)
    factors = []
    prev = frozenset()
    for ideal in series:
        cls = ideal - prev
        prev = ideal
        if S.zero in cls:
            continue
        Q = rees_quotient(S, cls)
        z = Q.zero
        nz = Q.nonzero()
        null = all(Q.table[x][y] == z for x in nz for y in nz)
        if null:
            factors.append(
                PrincipalFactor(FactorKind.NULL, tuple(sorted(cls)), Q, None, len(nz), green.j_class_id(min(cls)))
            )
            continue
        data = decompose_zero_simple(Q)
        kind = FactorKind.GROUP if data.m == 1 and data.n == 1 else FactorKind.ZERO_SIMPLE
        factors.append(
            PrincipalFactor(kind, tuple(sorted(cls)), Q, data, len(nz), green.j_class_id(min(cls)))
        )
    return factors
