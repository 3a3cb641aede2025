"""Dense exact linear algebra over Fraction or PuiseuxFraction entries.

Matrices are lists of row lists. Rational matrices go through FLINT
(``fmpz_mat`` for integer input, ``fmpq_mat`` otherwise); matrices with
Puiseux entries use plain Gauss-Jordan elimination over the field. Results
are returned as Fraction rows either way.
"""

from __future__ import annotations

from fractions import Fraction

from flint import fmpq, fmpq_mat, fmpz_mat

from services.arith import Scalar, is_rational

type Vector = list[Scalar]
type Matrix = list[list[Scalar]]


class DimensionMismatch(ValueError):
    pass


def shape(a: Matrix, cols: int | None = None) -> tuple[int, int]:
    """Return (rows, cols), checking rectangularity.

    ``cols`` is needed for matrices without rows.
    """
    if not a:
        return 0, cols or 0
    n = len(a[0])
    for row in a:
        if len(row) != n:
            raise DimensionMismatch("ragged matrix")
    return len(a), n


def is_integral(a: Matrix) -> bool:
    for row in a:
        for x in row:
            if isinstance(x, int):
                continue
            if not is_rational(x) or x.denominator != 1:
                return False
    return True


def is_rational_matrix(a: Matrix) -> bool:
    return all(is_rational(x) for row in a for x in row)


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def dot(u, v) -> Scalar:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)} differ")
    total = 0
    for x, y in zip(u, v):
        if x and y:
            total = total + x * y
    return total if not isinstance(total, int) else Fraction(total)


def mat_vec(a: Matrix, x: Vector) -> Vector:
    return [dot(row, x) for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


# ---------------------------------------------------------------------------
# FLINT conversion


def _fmpq(x) -> fmpq:
    x = Fraction(x)
    return fmpq(x.numerator, x.denominator)


def _fraction(x) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def to_fmpq_mat(a: Matrix) -> fmpq_mat:
    return fmpq_mat([[_fmpq(x) for x in row] for row in a])


def to_fmpz_mat(a: Matrix) -> fmpz_mat:
    return fmpz_mat([[int(x) for x in row] for row in a])


def from_fmpq_mat(m: fmpq_mat) -> Matrix:
    return [[_fraction(x) for x in row] for row in m.tolist()]


# ---------------------------------------------------------------------------
# elimination


def _field_rows(a: Matrix) -> Matrix:
    """Copy of ``a`` with Python ints lifted to Fraction so ``/`` stays exact."""
    return [[Fraction(x) if isinstance(x, int) else x for x in row] for row in a]


def _pivot_columns(r: Matrix) -> list[int]:
    return [next(c for c, x in enumerate(row) if x != 0) for row in r]


def _rref_field(a: Matrix) -> tuple[Matrix, list[int]]:
    m = _field_rows(a)
    rows, cols = shape(m)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [x - factor * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over the field and the pivot columns."""
    rows, cols = shape(a)
    if not rows or not cols:
        return [], []
    if not is_rational_matrix(a):
        return _rref_field(a)
    reduced, rk = to_fmpq_mat(a).rref()
    r = from_fmpq_mat(reduced)[:rk]
    return r, _pivot_columns(r)


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    if is_integral(a):
        return to_fmpz_mat(a).rank()
    if is_rational_matrix(a):
        return to_fmpq_mat(a).rref()[1]
    return len(_rref_field(a)[1])


def kernel(a: Matrix, cols: int | None = None) -> Matrix:
    """Basis (as rows) of {x : a x = 0}."""
    _, n = shape(a, cols)
    if not a:
        return identity(n)
    r, pivots = rref(a)
    free = [c for c in range(n) if c not in set(pivots)]
    basis: Matrix = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(r, pivots):
            if row[f] != 0:
                v[p] = -row[f]
        basis.append(v)
    return basis


def integer_kernel(a: Matrix, cols: int | None = None) -> list[tuple[int, ...]]:
    """Lattice basis of ``{x in Z^n : a x = 0}`` for an integer matrix ``a``.

    Row-style Hermite normal form of ``[a^T | I]``: the rows whose left block
    vanishes carry a unimodular basis of the kernel lattice.
    """
    _, n = shape(a, cols)
    m = len(a)
    if not m:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    augmented = [
        [int(a[j][i]) for j in range(m)] + [int(i == c) for c in range(n)]
        for i in range(n)
    ]
    basis = []
    for row in to_fmpz_mat(augmented).hnf().tolist():
        ints = [int(x) for x in row]
        if not any(ints[:m]) and any(ints[m:]):
            basis.append(tuple(ints[m:]))
    return basis


def solve(a: Matrix, b: Vector) -> Vector | None:
    """Solve ``a x = b`` exactly; None when inconsistent.

    Free variables are set to zero.
    """
    rows, cols = shape(a)
    if len(b) != rows:
        raise DimensionMismatch(f"matrix has {rows} rows, right side {len(b)}")
    augmented = [list(row) + [bi] for row, bi in zip(a, b)]
    r, pivots = rref(augmented) if augmented else ([], [])
    if cols in pivots:
        return None
    x: Vector = [Fraction(0)] * cols
    for row, p in zip(r, pivots):
        x[p] = row[cols]
    return x


def _det_field(a: Matrix) -> Scalar:
    m = _field_rows(a)
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        p = m[c][c]
        result = result * p
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / p
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def det(a: Matrix) -> Scalar:
    rows, cols = shape(a)
    if rows != cols:
        raise DimensionMismatch(f"determinant of a non-square {rows}x{cols} matrix")
    if not rows:
        return Fraction(1)
    if is_integral(a):
        return Fraction(int(to_fmpz_mat(a).det()))
    if is_rational_matrix(a):
        return _fraction(to_fmpq_mat(a).det())
    return _det_field(a)


def inverse(a: Matrix) -> Matrix:
    rows, cols = shape(a)
    if rows != cols:
        raise DimensionMismatch("inverse of a non-square matrix")
    if rows and is_rational_matrix(a):
        # FLINT raises ZeroDivisionError for singular input
        return from_fmpq_mat(to_fmpq_mat(a).inv())
    augmented = [list(row) + e for row, e in zip(a, identity(rows))]
    r, pivots = _rref_field(augmented) if augmented else ([], [])
    if pivots[:rows] != list(range(rows)):
        raise ZeroDivisionError("matrix is singular")
    return [row[rows:] for row in r]


def independent_rows(a: Matrix, cols: int | None = None) -> list[int]:
    """Indices of a maximal linearly independent subset, greedily in order."""
    _, n = shape(a, cols)
    chosen: list[int] = []
    basis: list[tuple[int, list]] = []  # (pivot column, reduced row)
    for idx, row in enumerate(_field_rows(a)):
        v = row
        for p, b in basis:
            if v[p] != 0:
                f = v[p] / b[p]
                v = [x - f * y if y else x for x, y in zip(v, b)]
        pivot = next((c for c in range(n) if v[c] != 0), None)
        if pivot is None:
            continue
        basis.append((pivot, v))
        chosen.append(idx)
        if len(chosen) == n:
            break
    return chosen
