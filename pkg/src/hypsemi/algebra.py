"""Contracted semigroup algebras Q0S over exact rationals.

The Jacobson radical is computed as the radical of the trace form
``(x, y) -> tr(L_{xy})`` of the left regular representation. Over a field of
characteristic 0 this equals J(A) for any algebra acting faithfully, which the
left regular representation of a unital algebra does.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from . import linalg
from .errors import NotUnital, NoZero, WrongDimension
from .semigroup import FiniteSemigroup, ReesMatrixData, adjoin, rees_element_index, rees_matrix_construct

ZERO = Fraction(0)
ONE = Fraction(1)


class _AlgebraOps:
    """Vector arithmetic shared by semigroup and general structure constants."""

    dim: int
    identity_coords: Optional[tuple]

    def product_coords(self, i: int, j: int) -> dict:
        raise NotImplementedError

    def basis_vector(self, i: int) -> tuple:
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def zero_vector(self) -> tuple:
        return (ZERO,) * self.dim

    def multiply(self, u, v) -> tuple:
        out = [ZERO] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in self.product_coords(i, j).items():
                    out[k] += ab * c
        return tuple(out)

    def trace_of_basis(self) -> list:
        # tr(L_{b_k}) = sum_l coefficient of b_l in b_k b_l
        return [sum((self.product_coords(k, l).get(l, ZERO) for l in range(self.dim)), ZERO)
                for k in range(self.dim)]

    def trace_form(self) -> list:
        t = self.trace_of_basis()
        return [
            [sum((c * t[k] for k, c in self.product_coords(i, j).items()), ZERO) for j in range(self.dim)]
            for i in range(self.dim)
        ]


@dataclass(frozen=True)
class AlgebraRep(_AlgebraOps):
    """Q0S: basis = nonzero elements of S; ``structure[i][j]`` is a basis index or ``None``."""

    dim: int
    basis_labels: tuple
    structure: tuple
    identity_coords: Optional[tuple] = None
    names: Optional[tuple] = None

    def product_coords(self, i, j):
        k = self.structure[i][j]
        return {} if k is None else {k: ONE}

    def coords_of_element(self, x: int) -> tuple:
        return self.basis_vector(self.basis_labels.index(x))


@dataclass(frozen=True)
class RationalAlgebra(_AlgebraOps):
    """General structure constants: ``gamma[i][j]`` is the coordinate tuple of b_i b_j."""

    dim: int
    gamma: tuple
    identity_coords: Optional[tuple] = None

    def product_coords(self, i, j):
        return {k: c for k, c in enumerate(self.gamma[i][j]) if c}


def structure_constants(S: FiniteSemigroup) -> AlgebraRep:
    if S.zero is None:
        raise NoZero("Q0S needs a zero; adjoin one (Q0 of S with a new zero is QS)")
    basis = tuple(S.nonzero())
    index = {x: i for i, x in enumerate(basis)}
    structure = tuple(
        tuple(None if S.table[a][b] == S.zero else index[S.table[a][b]] for b in basis) for a in basis
    )
    names = tuple(S.label(x) for x in basis)
    A = AlgebraRep(len(basis), basis, structure, None, names)
    return replace(A, identity_coords=find_identity(A))


def find_identity(A) -> Optional[tuple]:
    """Two-sided identity of ``A`` as a coordinate vector, or ``None``.

    The zero algebra counts as unital (its identity is the empty vector).
    """
    d = A.dim
    if d == 0:
        return ()
    rows, rhs = [], []
    for i in range(d):
        for c in range(d):
            # sum_k u_k (b_k b_i)_c = delta_{ic}   and   sum_k u_k (b_i b_k)_c = delta_{ic}
            rows.append([A.product_coords(k, i).get(c, ZERO) for k in range(d)])
            rhs.append(ONE if c == i else ZERO)
            rows.append([A.product_coords(i, k).get(c, ZERO) for k in range(d)])
            rhs.append(ONE if c == i else ZERO)
    sol = linalg.solve(rows, rhs, d)
    if sol is None:
        return None
    u, kernel = sol
    if kernel:
        raise AssertionError("two-sided identity is not unique")
    return u


@dataclass(frozen=True)
class RadicalData:
    dimension: int
    basis: tuple
    nilpotency_index: int


def _power_span(A, left_basis, right_basis):
    prods = [A.multiply(u, v) for u in left_basis for v in right_basis]
    return linalg.row_basis([p for p in prods if any(p)], A.dim)


def nilpotency_index(A, basis) -> int:
    """Smallest k with J^k = 0 (1 for the zero ideal)."""
    k, current = 1, list(basis)
    while current:
        current = _power_span(A, current, basis)
        k += 1
        if k > A.dim + 2:
            raise AssertionError("radical candidate is not nilpotent")
    return k


def radical_basis(A) -> RadicalData:
    """J(A) as the kernel of the trace-form Gram matrix."""
    if A.identity_coords is None:
        raise NotUnital("the algebra has no identity")
    gram = A.trace_form()
    kernel = linalg.nullspace(gram, A.dim)
    basis = tuple(linalg.row_basis(kernel, A.dim))
    return RadicalData(len(basis), basis, nilpotency_index(A, basis))


def is_two_sided_ideal(A, basis) -> bool:
    basis = list(basis)
    for v in basis:
        for i in range(A.dim):
            b = A.basis_vector(i)
            for w in (A.multiply(v, b), A.multiply(b, v)):
                if not linalg.in_span(basis, w, A.dim):
                    return False
    return True


def quotient_algebra(A, ideal_basis) -> RationalAlgebra:
    """A/I on a complement of ``ideal_basis`` spanned by standard basis vectors."""
    d = A.dim
    ideal = [tuple(v) for v in ideal_basis]
    complement = []
    for i in range(d):
        e = A.basis_vector(i)
        if not linalg.in_span(ideal + complement, e, d):
            complement.append(e)
    k = len(ideal)
    # columns: ideal vectors then complement vectors
    change = [[vec[r] for vec in ideal + complement] for r in range(d)]
    inv = linalg.inverse(change)

    def reduce_mod(v):
        coords = [sum((inv[r][c] * v[c] for c in range(d)), ZERO) for r in range(d)]
        return tuple(coords[k:])

    gamma = tuple(
        tuple(reduce_mod(A.multiply(a, b)) for b in complement) for a in complement
    )
    ident = None if A.identity_coords is None else reduce_mod(A.identity_coords)
    return RationalAlgebra(len(complement), gamma, ident)


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def t2_relations_hold(A, e1, e2, n) -> bool:
    """Upper-triangular matrix-unit relations for E1 = e11, E2 = e22, N = e12."""
    one = A.identity_coords
    zero = A.zero_vector()
    m = A.multiply
    return (
        any(n)
        and _add(e1, e2) == tuple(one)
        and m(e1, e1) == tuple(e1)
        and m(e2, e2) == tuple(e2)
        and m(e1, e2) == zero
        and m(e2, e1) == zero
        and m(n, n) == zero
        and m(e1, n) == tuple(n)
        and m(n, e2) == tuple(n)
        and m(n, e1) == zero
        and m(e2, n) == zero
    )


def t2_witness(A) -> Optional[tuple]:
    """``(E1, E2, N)`` exhibiting ``A ≅ T2(Q)``, or ``None``.

    N spans the radical; E1 ranges over {-1,0,1}-combinations of basis
    elements together with sample points of the affine space cut out by the
    linear conditions ``E1 N = N``, ``N E1 = 0``.
    """
    if A.dim != 3:
        raise WrongDimension(f"T2(Q) has dimension 3, algebra has dimension {A.dim}")
    if A.identity_coords is None:
        raise NotUnital("the algebra has no identity")
    rad = radical_basis(A)
    if rad.dimension != 1:
        return None
    n = rad.basis[0]
    one = tuple(A.identity_coords)
    d = A.dim
    candidates = [tuple(Fraction(c) for c in cs) for cs in itertools.product((-1, 0, 1), repeat=d)]
    # E N = N and N E = 0 as linear equations in the coordinates of E
    rows, rhs = [], []
    left = [A.multiply(A.basis_vector(k), n) for k in range(d)]
    right = [A.multiply(n, A.basis_vector(k)) for k in range(d)]
    for c in range(d):
        rows.append([left[k][c] for k in range(d)])
        rhs.append(n[c])
        rows.append([right[k][c] for k in range(d)])
        rhs.append(ZERO)
    sol = linalg.solve(rows, rhs, d)
    if sol is not None:
        p, kernel = sol
        candidates = [p] + [_add(p, v) for v in kernel] + [_sub(p, v) for v in kernel] + candidates
    for e1 in candidates:
        e2 = _sub(one, e1)
        if t2_relations_hold(A, e1, e2, n):
            return e1, e2, n
    return None


def t2_witness_check(A) -> bool:
    return t2_witness(A) is not None


# -- Munn algebras -----------------------------------------------------------

def munn_radical(data: ReesMatrixData) -> tuple:
    """Radical of Q0 M0(G; m, n; P), computed inside Q0 of the semigroup with identity adjoined.

    Returns ``(RadicalData, AlgebraRep)``. The ideal Q0 M0 has codimension one
    with semisimple quotient Q, so both radicals coincide; the check that every
    radical vector has zero coefficient on the adjoined identity is made here.
    """
    S = rees_matrix_construct(data)
    S1 = adjoin(S, "identity")
    A = structure_constants(S1)
    rad = radical_basis(A)
    if S1 is not S:
        top = A.basis_labels.index(S1.identity)
        if any(v[top] for v in rad.basis):
            raise AssertionError("radical leaves the Munn ideal")
    return rad, A


def munn_radical_dimension(data: ReesMatrixData) -> int:
    return munn_radical(data)[0].dimension


def munn_collapse_check(data: ReesMatrixData) -> bool:
    """Is ``A -> A∘P̄`` an isomorphism from the Munn algebra onto ``M_m(Q)``?

    The map is evaluated on the basis ``(1, i, j) -> E_ij P̄``; multiplicativity
    is checked against the semigroup product of the constructed Rees semigroup.
    """
    if not data.trivial_group or data.m != data.n:
        return False
    m = data.m
    Pbar = [[Fraction(x) for x in row] for row in data.trivialized()]
    if linalg.rank(Pbar) != m:
        return False
    S = rees_matrix_construct(data)

    def image(i, j):
        # E_ij (m x n) times P̄ (n x m): row i of the result is row j of P̄
        return [[Pbar[j][c] if r == i else ZERO for c in range(m)] for r in range(m)]

    zero_mat = [[ZERO] * m for _ in range(m)]
    flat = []
    for i in range(m):
        for j in range(m):
            flat.append([x for row in image(i, j) for x in row])
            for k in range(m):
                for l in range(m):
                    p = S.table[rees_element_index(data, 0, i, j)][rees_element_index(data, 0, k, l)]
                    if p == S.zero:
                        expected = zero_mat
                    else:
                        pi, pj = divmod(p, m)
                        expected = image(pi, pj)
                    if linalg.matmul(image(i, j), image(k, l)) != expected:
                        return False
    # images of the m*m basis elements must be linearly independent
    return linalg.rank(flat) == m * m
