"""Exact integer matrices and normal forms.

Everything here is arbitrary-precision integer arithmetic: Smith and
Hermite normal forms, determinants, adjoints, minor gcds, and saturated
integer kernels. No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError

__all__ = [
    "IntMatrix",
    "SnfDecomposition",
    "determinant",
    "smith_normal_form",
    "hermite_rows",
    "minor_gcd",
    "adjoint",
    "integer_kernel",
    "rank",
]


def _check_int(x):
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"matrix entries must be int, got {type(x).__name__}")
    return x


class IntMatrix:
    """Immutable integer matrix with at least one row and one column."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows_of_entries):
        data = tuple(tuple(_check_int(x) for x in row) for row in rows_of_entries)
        if not data or not data[0]:
            raise ValueError("matrix needs at least one row and one column")
        w = len(data[0])
        if any(len(r) != w for r in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", w)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def entry(self, i, j):
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def column(self, j):
        return tuple(r[j] for r in self._data)

    def to_rows(self):
        return [list(r) for r in self._data]

    @property
    def is_square(self):
        return self.rows == self.cols

    def transpose(self):
        return IntMatrix([self.column(j) for j in range(self.cols)])

    def __mul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        bt = other.transpose()._data
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self._data]
        )

    def apply(self, vec):
        """Matrix times column vector, returned as a tuple."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self._data)

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __iter__(self):
        return iter(self._data)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"IntMatrix({self.rows}x{self.cols}: {body})"


def determinant(mat: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if not mat.is_square:
        raise PreconditionError("determinant requires a square matrix")
    n = mat.rows
    a = mat.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss: the division is exact
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfDecomposition:
    """Unimodular P, Q with P*L*Q diagonal, plus invariant factors.

    gamma lists the positive diagonal entries gamma_1 | gamma_2 | ... in
    divisibility order; rank == len(gamma).
    """

    P: IntMatrix
    Q: IntMatrix
    gamma: tuple
    rank: int

    def diagonal_matrix(self, rows, cols):
        d = [[0] * cols for _ in range(rows)]
        for i, g in enumerate(self.gamma):
            d[i][i] = g
        return IntMatrix(d)


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _addmul_row(m, dst, src, c):
    if c:
        rd, rs = m[dst], m[src]
        for j in range(len(rd)):
            rd[j] += c * rs[j]


def _addmul_col(m, dst, src, c):
    if c:
        for row in m:
            row[dst] += c * row[src]


def _negate_row(m, i):
    m[i] = [-x for x in m[i]]


def smith_normal_form(mat: IntMatrix) -> SnfDecomposition:
    """Smith normal form with tracked unimodular transforms.

    Pivot selection always takes the first entry of minimal absolute
    value in the remaining submatrix, so the result is deterministic.
    The identity P*mat*Q == diag(gamma) is verified exactly before
    returning.
    """
    s, m = mat.rows, mat.cols
    a = mat.to_rows()
    p = IntMatrix.identity(s).to_rows()
    q = IntMatrix.identity(m).to_rows()

    def min_pivot(k):
        best = None
        for i in range(k, s):
            for j in range(k, m):
                v = a[i][j]
                if v != 0 and (best is None or abs(v) < abs(best[0])):
                    best = (v, i, j)
        return best

    limit = min(s, m)
    k = 0
    while k < limit:
        found = min_pivot(k)
        if found is None:
            break
        _, i0, j0 = found
        if i0 != k:
            _swap_rows(a, k, i0)
            _swap_rows(p, k, i0)
        if j0 != k:
            _swap_cols(a, k, j0)
            _swap_cols(q, k, j0)
        if a[k][k] < 0:
            _negate_row(a, k)
            _negate_row(p, k)
        piv = a[k][k]
        dirty = False
        for i in range(k + 1, s):
            if a[i][k]:
                c = -(a[i][k] // piv)
                _addmul_row(a, i, k, c)
                _addmul_row(p, i, k, c)
                if a[i][k]:
                    dirty = True
        for j in range(k + 1, m):
            if a[k][j]:
                c = -(a[k][j] // piv)
                _addmul_col(a, j, k, c)
                _addmul_col(q, j, k, c)
                if a[k][j]:
                    dirty = True
        if dirty:
            continue  # smaller remainders appeared; reselect pivot
        k += 1

    r = k
    # enforce the divisibility chain with exact 2x2 unimodular fixes
    for i in range(r):
        for j in range(i + 1, r):
            di, dj = a[i][i], a[j][j]
            if dj % di == 0:
                continue
            g = gcd(di, dj)
            x, y = _ext_gcd(di, dj)
            bi, bj = di // g, dj // g
            # U = [[x, y], [-bj, bi]] on rows i,j; V = [[1, -y*bj], [1, x*bi]] on cols i,j
            _apply_2x2_rows(a, i, j, x, y, -bj, bi)
            _apply_2x2_rows(p, i, j, x, y, -bj, bi)
            _apply_2x2_cols(a, i, j, 1, -y * bj, 1, x * bi)
            _apply_2x2_cols(q, i, j, 1, -y * bj, 1, x * bi)
            assert x * di + y * dj == g
            assert a[i][i] == g and a[j][j] == di * dj // g
            assert a[i][j] == 0 and a[j][i] == 0

    gamma = tuple(a[i][i] for i in range(r))
    pm, qm = IntMatrix(p), IntMatrix(q)
    dec = SnfDecomposition(P=pm, Q=qm, gamma=gamma, rank=r)

    prod = pm * mat * qm
    assert prod == dec.diagonal_matrix(s, m), "SNF identity violated"
    assert abs(determinant(pm)) == 1 and abs(determinant(qm)) == 1
    for u, v in zip(gamma, gamma[1:]):
        assert v % u == 0
    return dec


def _ext_gcd(a, b):
    """x, y with x*a + y*b == gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_x, x = x, old_x - qt * x
        old_y, y = y, old_y - qt * y
    if old_r < 0:
        old_x, old_y = -old_x, -old_y
    return old_x, old_y


def _apply_2x2_rows(m, i, j, a11, a12, a21, a22):
    ri, rj = m[i], m[j]
    m[i] = [a11 * u + a12 * v for u, v in zip(ri, rj)]
    m[j] = [a21 * u + a22 * v for u, v in zip(ri, rj)]


def _apply_2x2_cols(m, i, j, a11, a12, a21, a22):
    # right multiplication by [[a11, a12], [a21, a22]] restricted to cols i, j
    for row in m:
        u, v = row[i], row[j]
        row[i] = u * a11 + v * a21
        row[j] = u * a12 + v * a22


def rank(mat: IntMatrix) -> int:
    return smith_normal_form(mat).rank


def minor_gcd(mat: IntMatrix, i: int) -> int:
    """gcd of all i x i minors; 0 when every such minor vanishes."""
    if i < 1 or i > min(mat.rows, mat.cols):
        raise PreconditionError(f"minor size {i} out of range")
    dec = smith_normal_form(mat)
    if i > dec.rank:
        return 0
    out = 1
    for g in dec.gamma[:i]:
        out *= g
    return out


def adjoint(mat: IntMatrix) -> IntMatrix:
    """Adjugate: mat * adjoint(mat) == determinant(mat) * identity."""
    if not mat.is_square:
        raise PreconditionError("adjoint requires a square matrix")
    n = mat.rows
    if n == 1:
        return IntMatrix([[1]])
    rows = mat.to_rows()
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [
                [rows[r][c] for c in range(n) if c != i]
                for r in range(n)
                if r != j
            ]
            sign = -1 if (i + j) % 2 else 1
            out[i][j] = sign * determinant(IntMatrix(sub))
    return IntMatrix(out)


def integer_kernel(mat: IntMatrix) -> list:
    """Basis of {x in Z^cols : mat @ x = 0}.

    The kernel of an integer matrix is a saturated subgroup, so the
    returned basis spans it exactly; full column rank gives [].
    """
    dec = smith_normal_form(mat)
    return [dec.Q.column(j) for j in range(dec.rank, mat.cols)]


def hermite_rows(rows, width) -> tuple:
    """Canonical row Hermite form of the integer row span.

    Returns the nonzero rows as tuples: pivots positive and strictly to
    the right as you go down, entries above each pivot reduced into
    [0, pivot). Two row sets span the same lattice iff their forms are
    equal. An empty span gives ().
    """
    work = []
    for r in rows:
        r = list(r)
        if len(r) != width:
            raise ValueError("row width mismatch")
        if any(r):
            work.append(r)
    result = []
    for col in range(width):
        if not work:
            break
        live = [r for r in work if r[col] != 0]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            for r in live[1:]:
                c = r[col] // piv[col]
                if c:
                    for t in range(col, width):
                        r[t] -= c * piv[t]
            live = [r for r in live if r[col] != 0]
        piv = live[0]
        if piv[col] < 0:
            for t in range(col, width):
                piv[t] = -piv[t]
        result.append(piv)
        work = [r for r in work if r is not piv and any(r)]
    # reduce entries above each pivot
    pivots = []
    for r in result:
        j = next(t for t in range(width) if r[t] != 0)
        pivots.append(j)
    # sweep pivots left to right: reducing at a pivot column only touches
    # columns to its right, so earlier normalizations stay intact
    for idx in range(len(result)):
        j = pivots[idx]
        piv = result[idx]
        for upper in range(idx):
            c = result[upper][j] // piv[j]
            if c:
                for t in range(j, width):
                    result[upper][t] -= c * piv[t]
    return tuple(tuple(r) for r in result)
