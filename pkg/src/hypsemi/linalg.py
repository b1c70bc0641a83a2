"""Exact linear algebra over the rationals.

Matrices are lists of rows; entries are coerced to :class:`fractions.Fraction`.
Nothing here ever rounds.
"""
from fractions import Fraction


def as_fraction_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def _pivot_row(m, col, start):
    # smallest |num * den| keeps intermediate coefficients small
    best, best_cost = None, None
    for r in range(start, len(m)):
        v = m[r][col]
        if v:
            cost = abs(v.numerator * v.denominator)
            if best is None or cost < best_cost:
                best, best_cost = r, cost
    return best


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns ``(matrix, pivot_columns)``. The input is not modified.
    """
    m = as_fraction_matrix(rows)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = _pivot_row(m, c, r)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : M x = 0}`` as a list of tuples."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    m, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][f]
        basis.append(tuple(v))
    return basis


def solve(rows, rhs, ncols):
    """Solve ``M x = b``.

    Returns ``(particular, kernel_basis)`` or ``None`` when inconsistent.
    """
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    m, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    return tuple(x), nullspace(rows, ncols)


def row_basis(vectors, ncols):
    """Echelon basis of the span of ``vectors`` (possibly empty)."""
    if not vectors:
        return []
    m, pivots = rref(vectors, ncols)
    return [tuple(m[r]) for r in range(len(pivots))]


def in_span(vectors, v, ncols):
    if not any(v):
        return True
    return rank(list(vectors) + [v]) == rank(vectors) if vectors else False


def matmul(a, b):
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def inverse(rows):
    """Inverse of a square matrix, or ``None`` if singular."""
    n = len(rows)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(rows)]
    m, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in m]
