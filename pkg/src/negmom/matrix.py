"""Dense matrices over the exact polynomial ring or its fraction field.

Determinants of polynomial matrices use fraction-free Bareiss
elimination (with row pivoting on symbolic zeros); matrices of rational
functions fall back to cofactor expansion, which is plenty at the sizes
used here.  Inverses are adjugate/determinant pairs with entries reduced
as rational functions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Union

from .poly import MultiPoly, poly_div_exact
from .ratfunc import RatFunc

Entry = Union[MultiPoly, RatFunc, int, Fraction]


class SingularMatrixError(ArithmeticError):
    def __init__(self, message: str, determinant=None):
        super().__init__(message)
        self.determinant = determinant


def _as_entry(e: Entry):
    if isinstance(e, (MultiPoly, RatFunc)):
        return e
    return MultiPoly.const(e)


class Matrix:
    """Rectangular grid of ring elements; rows are tuples, never mutated."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence[Entry]]):
        self.data = [tuple(_as_entry(e) for e in row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        if any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[MultiPoly.const(1) if i == j else MultiPoly.zero()
                     for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(self.data[i][j] == other.data[i][j]
                   for i in range(self.rows) for j in range(self.cols))

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = self.data[i][0] * other.data[0][j]
                for t in range(1, self.cols):
                    acc = acc + self.data[i][t] * other.data[t][j]
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __pow__(self, n: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("powers need a square matrix")
        if n < 0:
            return self.inverse() ** (-n)
        result = Matrix.identity(self.rows)
        for _ in range(n):
            result = result * self
        return result

    def transpose(self) -> "Matrix":
        return Matrix([[self.data[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def map(self, fn: Callable) -> "Matrix":
        return Matrix([[fn(e) for e in row] for row in self.data])

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "Matrix":
        rows = sorted(rows)
        cols = sorted(cols)
        return Matrix([[self.data[i][j] for j in cols] for i in rows])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __repr__(self):
        body = "; ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.data)
        return f"Matrix({body})"


def _is_zero_entry(e) -> bool:
    return e.is_zero()


def determinant(m: Matrix) -> MultiPoly:
    """Exact determinant; polynomial entries use fraction-free Bareiss,
    with a packed-exponent cofactor path for small matrices of large
    polynomials (where Bareiss' exact divisions dominate)."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return MultiPoly.const(1)
    if any(isinstance(e, RatFunc) for row in m.data for e in row):
        r = _det_cofactor_rat(m)
        return r
    if 2 <= n <= 4 and max(len(e) for row in m.data for e in row) > 64:
        packed = _det_packed(m)
        if packed is not None:
            return packed
    return _det_bareiss([list(row) for row in m.data])


def _det_packed(m: Matrix):
    """Cofactor determinant over integer-packed monomials.

    Each monomial becomes one integer with a balanced digit per variable,
    so monomial products are single integer additions.  Returns None when
    the exponent ranges would not fit the digit width safely.
    """
    n = m.rows
    vars_ = sorted({v for row in m.data for e in row for v in e.variables()})
    if not vars_ or len(vars_) > 40:
        return None
    max_abs = 0
    for row in m.data:
        for e in row:
            for mono, _ in e._terms.items():
                for _, exp in mono:
                    max_abs = max(max_abs, abs(exp))
    # det multiplies n entries; digits stay within n * max_abs
    half = n * max_abs + 2
    base = 1
    while base < 2 * half + 2:
        base <<= 1
    index = {v: i for i, v in enumerate(vars_)}
    powers = [base ** i for i in range(len(vars_))]

    def encode(p: MultiPoly):
        out = {}
        for mono, c in p._terms.items():
            key = 0
            for v, exp in mono:
                key += exp * powers[index[v]]
            out[key] = c
        return out

    grid = [[encode(e) for e in row] for row in m.data]

    def mul(a, b):
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = k1 + k2
                nc = get(k, 0) + c1 * c2
                if nc:
                    out[k] = nc
                else:
                    del out[k]
        return out

    def add(a, b, sign):
        out = dict(a)
        get = out.get
        for k, c in b.items():
            nc = get(k, 0) + (c if sign > 0 else -c)
            if nc:
                out[k] = nc
            else:
                del out[k]
        return out

    def det(rows, cols):
        if len(rows) == 1:
            return grid[rows[0]][cols[0]]
        r0 = rows[0]
        acc = {}
        for t, c0 in enumerate(cols):
            e = grid[r0][c0]
            if not e:
                continue
            sub = det(rows[1:], cols[:t] + cols[t + 1:])
            if not sub:
                continue
            acc = add(acc, mul(e, sub), 1 if t % 2 == 0 else -1)
        return acc

    packed = det(list(range(n)), list(range(n)))
    terms = {}
    half_base = base >> 1
    for key, c in packed.items():
        mono = []
        rem = key
        for i, v in enumerate(vars_):
            digit = rem % base
            if digit >= half_base:
                digit -= base
            rem = (rem - digit) // base
            if digit:
                mono.append((v, digit))
        if rem:
            return None  # overflow guard; caller falls back
        mono.sort()
        terms[tuple(mono)] = c
    return MultiPoly(terms)


def _det_bareiss(a: List[List[MultiPoly]]) -> MultiPoly:
    n = len(a)
    sign = 1
    prev = MultiPoly.const(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = poly_div_exact(num, prev)
            a[i][k] = MultiPoly.zero()
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _det_cofactor_rat(m: Matrix):
    n = m.rows
    if n == 0:
        return RatFunc(1)
    if n == 1:
        return m.data[0][0]
    acc = None
    for j in range(n):
        e = m.data[0][j]
        if _is_zero_entry(e):
            continue
        sub = m.submatrix(range(1, n), [c for c in range(n) if c != j])
        term = e * _det_cofactor_rat(sub)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return RatFunc(0)
    return acc


def minor(m: Matrix, rows: Iterable[int], cols: Iterable[int]) -> MultiPoly:
    """Minor [m]_{rows, cols}; empty index sets give 1 by convention."""
    rows = sorted(set(rows))
    cols = sorted(set(cols))
    if len(rows) != len(cols):
        raise ValueError("minor needs index sets of equal cardinality")
    if rows and (rows[-1] >= m.rows or rows[0] < 0):
        raise IndexError("row index out of range")
    if cols and (cols[-1] >= m.cols or cols[0] < 0):
        raise IndexError("column index out of range")
    return determinant(m.submatrix(rows, cols))


def adjugate(m: Matrix) -> Matrix:
    """Transposed cofactor matrix; m * adjugate(m) = det(m) * I."""
    if not m.is_square():
        raise ValueError("adjugate of a non-square matrix")
    n = m.rows
    if n == 0:
        return m
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = m.submatrix([r for r in range(n) if r != j],
                              [c for c in range(n) if c != i])
            cof = determinant(sub)
            if (i + j) % 2:
                cof = -cof
            out[i][j] = cof
    return Matrix(out)


def matrix_inverse(m: Matrix) -> Matrix:
    """Exact inverse with RatFunc entries; singular input raises with det."""
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    det = determinant(m)
    if det.is_zero():
        raise SingularMatrixError("matrix is singular", determinant=det)
    if isinstance(det, RatFunc):
        adj = adjugate(m)
        inv_det = RatFunc(1) / det
        return adj.map(lambda e: e * inv_det)
    adj = adjugate(m)
    return adj.map(lambda e: RatFunc(e, det))


def matrix_reverse_index(m: Matrix, n: int) -> Matrix:
    return m.map(lambda e: e.reverse_index(n))
