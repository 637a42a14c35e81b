"""Small dense exact linear algebra over the rationals.

Everything in this package that touches a field works over ``fractions.Fraction``,
so there is no tolerance policy anywhere: a rank is a rank. Matrices are plain
``list[list[Fraction]]`` in row-major order; the systems solved here are tiny
(dimensions rarely exceed a few dozen), so no attempt is made to be clever.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]
Vector = list[Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def mat(rows) -> Matrix:
    """Normalize a nested sequence of numbers into a Fraction matrix."""
    return [[Fraction(x) for x in row] for row in rows]


def zeros(m: int, n: int) -> Matrix:
    return [[ZERO] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = ONE
    return out


def shape(a: Matrix) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: Matrix) -> Matrix:
    c = Fraction(c)
    return [[c * x for x in row] for row in a]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    rows_a, cols_a = shape(a)
    rows_b, cols_b = shape(b)
    if cols_a != rows_b:
        raise ValueError(f"shape mismatch: {shape(a)} @ {shape(b)}")
    out = zeros(rows_a, cols_b)
    for i in range(rows_a):
        arow = a[i]
        orow = out[i]
        for k in range(cols_a):
            c = arow[k]
            if c:
                brow = b[k]
                for j in range(cols_b):
                    if brow[j]:
                        orow[j] += c * brow[j]
    return out


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum((c * x for c, x in zip(row, v)), ZERO) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def copy(a: Matrix) -> Matrix:
    return [row[:] for row in a]


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form.  Returns (R, pivot column indices)."""
    r = copy(a)
    m, n = shape(r)
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        piv = next((i for i in range(row, m) if r[i][col]), None)
        if piv is None:
            continue
        r[row], r[piv] = r[piv], r[row]
        inv = ONE / r[row][col]
        r[row] = [x * inv for x in r[row]]
        for i in range(m):
            if i != row and r[i][col]:
                c = r[i][col]
                r[i] = [x - c * y for x, y in zip(r[i], r[row])]
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a: Matrix, n_cols: int | None = None) -> list[Vector]:
    """Basis of {x : a @ x = 0}.  Pass n_cols when a may have zero rows."""
    if n_cols is None:
        if not a:
            raise ValueError("need n_cols for an empty matrix")
        n_cols = len(a[0])
    if not a:
        return [[ONE if j == i else ZERO for j in range(n_cols)] for i in range(n_cols)]
    r, pivots = rref(a)
    free = [j for j in range(n_cols) if j not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n_cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def solve(a: Matrix, b: Vector) -> Vector | None:
    """One particular solution of a @ x = b, or None if inconsistent."""
    m, n = shape(a)
    aug = [a[i][:] + [b[i]] for i in range(m)]
    r, pivots = rref(aug)
    if n in pivots:
        return None
    x = [ZERO] * n
    for i, p in enumerate(pivots):
        x[p] = r[i][n]
    return x


def is_invertible(a: Matrix) -> bool:
    m, n = shape(a)
    return m == n and (m == 0 or rank(a) == n)


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("inverse of a non-square matrix")
    if n == 0:
        return []
    aug = [a[i][:] + [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r]


def column_space_contains(a: Matrix, v: Vector) -> bool:
    """True iff v lies in the span of a's columns."""
    if not a:
        return all(x == 0 for x in v)
    return solve(a, v) is not None


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return copy(b)
    if not b:
        return copy(a)
    return [ra + rb for ra, rb in zip(a, b)]


def vstack(a: Matrix, b: Matrix) -> Matrix:
    return copy(a) + copy(b)


def rank_of_stack(mats: list[Matrix]) -> int:
    """Rank of the rows of all matrices stacked together."""
    rows = [row for m in mats for row in m]
    return rank(rows) if rows else 0
