"""Named semigroups and groups used throughout the tests and the CLI."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .groups import (
    abelian_group,
    alternating_group_4,
    c4_semidirect_c4,
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    direct_product,
    symmetric_group,
)
from .semigroup import FiniteSemigroup, ReesMatrixData, adjoin, rees_matrix_construct, validate_table, zero_direct_union

TRIVIAL = cyclic_group(1)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    object: FiniteSemigroup
    description: str
    is_group: bool = False


def rees_over_trivial(m, n, pbar) -> FiniteSemigroup:
    sandwich = tuple(tuple(0 if x else None for x in row) for row in pbar)
    return rees_matrix_construct(ReesMatrixData(TRIVIAL, m, n, sandwich))


def t_semigroup() -> FiniteSemigroup:
    """T = {e, f, θ} with xy = y on {e, f}."""
    S = rees_over_trivial(1, 2, [[1], [1]])
    return FiniteSemigroup(S.table, S.zero, S.identity, ("e", "f", "θ"))


def null_semigroup(k: int) -> FiniteSemigroup:
    """k nonzero elements, every product θ."""
    table = [[k] * (k + 1) for _ in range(k + 1)]
    names = [chr(ord("a") + i) for i in range(k)] + ["θ"]
    return validate_table(table, zero=k, names=names)


def _groups():
    return [
        ("C1", cyclic_group(1), "trivial group"),
        ("C2", cyclic_group(2), "cyclic group of order 2"),
        ("C3", cyclic_group(3), "cyclic group of order 3"),
        ("C4", cyclic_group(4), "cyclic group of order 4"),
        ("C5", cyclic_group(5), "exceptional abelian group"),
        ("C6", cyclic_group(6), "cyclic group of order 6"),
        ("C7", cyclic_group(7), "cyclic group of order 7"),
        ("C8", cyclic_group(8), "exceptional abelian group"),
        ("C9", cyclic_group(9), "cyclic group of order 9"),
        ("C12", cyclic_group(12), "exceptional abelian group"),
        ("C16", cyclic_group(16), "cyclic group of order 16"),
        ("C2^2", abelian_group(2, 2), "Klein four-group"),
        ("C2^3", abelian_group(2, 2, 2), "elementary abelian group of order 8"),
        ("C2^4", abelian_group(2, 2, 2, 2), "elementary abelian group of order 16"),
        ("C2xC4", abelian_group(2, 4), "abelian group of order 8, exponent 4"),
        ("C2^2xC4", abelian_group(2, 2, 4), "abelian group of order 16, exponent 4"),
        ("C4^2", abelian_group(4, 4), "abelian group of order 16, exponent 4"),
        ("C3^2", abelian_group(3, 3), "abelian group of order 9, exponent 3"),
        ("C2xC6", abelian_group(2, 6), "abelian group of order 12, exponent 6"),
        ("C2xC8", abelian_group(2, 8), "abelian group of order 16, exponent 8"),
        ("S3", symmetric_group(3), "exceptional nonabelian group, symmetric group of degree 3"),
        ("D4", dihedral_group(4), "exceptional nonabelian group, dihedral of order 8"),
        ("D5", dihedral_group(5), "dihedral group of order 10"),
        ("D6", dihedral_group(6), "dihedral group of order 12"),
        ("D8", dihedral_group(8), "dihedral group of order 16"),
        ("Q8", dicyclic_group(2), "quaternion group, Hamiltonian 2-group"),
        ("Q8xC2", direct_product(dicyclic_group(2), cyclic_group(2)), "Hamiltonian 2-group of order 16"),
        ("Q12", dicyclic_group(3), "exceptional nonabelian group, dicyclic of order 12"),
        ("Q16", dicyclic_group(4), "generalized quaternion group of order 16"),
        ("C4xC4", c4_semidirect_c4(), "exceptional nonabelian group C4:C4 (nontrivial action)"),
        ("A4", alternating_group_4(), "alternating group of degree 4"),
    ]


def _semigroups():
    T = t_semigroup()
    L = rees_over_trivial(2, 1, [[1, 1]])
    B2 = rees_over_trivial(2, 2, [[1, 0], [0, 1]])
    B2u = rees_over_trivial(2, 2, [[1, 1], [0, 1]])
    B2ones = rees_over_trivial(2, 2, [[1, 1], [1, 1]])
    M14 = rees_over_trivial(1, 4, [[1], [1], [1], [1]])
    N1, N2 = null_semigroup(1), null_semigroup(2)
    M12_C2 = rees_matrix_construct(ReesMatrixData(cyclic_group(2), 1, 2, ((0,), (0,))))
    return [
        ("T", T, "M0({1};1,2;(1;1)), right-zero semigroup {e,f} with zero"),
        ("T1", adjoin(T, "identity"), "T with identity adjoined; Q0T1 is T2(Q)"),
        ("L", L, "M0({1};2,1;(1 1)), left-zero dual of T"),
        ("L1", adjoin(L, "identity"), "L with identity adjoined"),
        ("B2", B2, "Brandt semigroup of 2x2 matrix units"),
        ("B2-1", adjoin(B2, "identity"), "B2 with identity adjoined"),
        ("B2u", B2u, "M0({1};2,2;[[1,1],[0,1]])"),
        ("B2u-1", adjoin(B2u, "identity"), "B2u with identity adjoined"),
        ("B2ones", B2ones, "M0({1};2,2;all ones), not hyperbolic"),
        ("B2ones-1", adjoin(B2ones, "identity"), "B2ones with identity adjoined"),
        ("M14-1", adjoin(M14, "identity"), "M0({1};1,4;ones) with identity adjoined"),
        ("M12C2-1", adjoin(M12_C2, "identity"), "M0(C2;1,2;(1;1)) with identity adjoined"),
        ("N1", N1, "null semigroup {a, θ}"),
        ("N1-1", adjoin(N1, "identity"), "{a, θ} with identity; Q0 is Q[x]/(x^2)"),
        ("N2", N2, "null semigroup {a, b, θ}"),
        ("N2-1", adjoin(N2, "identity"), "{a, b, θ} with identity adjoined"),
        ("T+C5", zero_direct_union(T, cyclic_group(5)), "0-direct union of T and C5 (non-unital)"),
        ("T1+C2", zero_direct_union(adjoin(T, "identity"), cyclic_group(2)), "0-direct union of T1 and C2"),
        ("C2+C3", zero_direct_union(cyclic_group(2), cyclic_group(3)), "0-direct union of two groups"),
        ("C5+S3", zero_direct_union(cyclic_group(5), symmetric_group(3)), "two exceptional groups"),
        ("B2+C6", zero_direct_union(B2, cyclic_group(6)), "Brandt semigroup beside a Higman group"),
        ("N1-1+C4", zero_direct_union(adjoin(N1, "identity"), cyclic_group(4)), "null factor beside groups"),
        ("T1+C2+C3", zero_direct_union(zero_direct_union(adjoin(T, "identity"), cyclic_group(2)), cyclic_group(3)),
         "three summands with incomparable J-classes"),
        ("L1+S3+C4", zero_direct_union(zero_direct_union(adjoin(L, "identity"), symmetric_group(3)),
                                       cyclic_group(4)), "left-zero factor beside S3 and C4"),
    ]


@lru_cache(maxsize=None)
def catalog() -> dict:
    out = {}
    for name, G, desc in _groups():
        out[name] = CatalogEntry(name, G, desc, is_group=True)
    for name, S, desc in _semigroups():
        out[name] = CatalogEntry(name, S, desc)
    return out


def get(name: str) -> FiniteSemigroup:
    try:
        return catalog()[name].object
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(catalog())}") from None


# abelian groups of exponent dividing 4 or 6, plus Hamiltonian 2-groups, order <= 16
HIGMAN_CORPUS = (
    "C1", "C2", "C3", "C4", "C6", "C2^2", "C2^3", "C2^4", "C2xC4", "C2^2xC4", "C4^2", "C3^2", "C2xC6",
    "Q8", "Q8xC2",
)
EXCEPTIONAL_GROUPS = ("C5", "C8", "C12", "S3", "D4", "Q12", "C4xC4")
NON_HYPERBOLIC_GROUPS = ("C7", "C9", "C16", "D5", "A4")
