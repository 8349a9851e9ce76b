"""Exact rational scalars and small dense linear algebra.

Every number in the package is a :class:`fractions.Fraction`.  Matrices are
immutable row-major grids; vectors are plain tuples of fractions.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatch, NotSymmetric, ParseError, SingularMatrix

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]
Number = Union[int, Fraction, str]

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def scalar(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; floats and decimals are rejected."""
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ParseError(f"not an exact scalar: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_scalar(x: Fraction) -> str:
    return str(Fraction(x))


def vector(values: Iterable[Number]) -> Vector:
    return tuple(scalar(v) for v in values)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} and {len(v)}")
    num, den = 0, 1
    for a, b in zip(u, v):
        if a and b:
            q = a.denominator * b.denominator
            num = num * q + a.numerator * b.numerator * den
            den *= q
    return Fraction(num, den)


def lcm_denominator(values: Iterable[Fraction]) -> int:
    d = 1
    for x in values:
        if x.denominator != 1:
            d = lcm(d, x.denominator)
    return d


def imatmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> list[list[int]]:
    """Product of integer matrices given as row lists."""
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in A]


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


class Matrix:
    """Immutable dense matrix of fractions; ``m[i, j]`` is row ``i``, column ``j``."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Number]]):
        data = tuple(tuple(scalar(x) for x in r) for r in rows)
        if data and any(len(r) != len(data[0]) for r in data):
            raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "rows", data)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def diag(cls, entries: Iterable[Number]) -> "Matrix":
        e = [scalar(x) for x in entries]
        return cls([[e[i] if i == j else 0 for j in range(len(e))] for i in range(len(e))])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Number]]) -> "Matrix":
        if not cols:
            raise DimensionMismatch("no columns")
        return cls(list(zip(*cols)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix(list(zip(*self.rows))) if self.rows else self

    @classmethod
    def _trusted(cls, rows) -> "Matrix":
        m = object.__new__(cls)
        object.__setattr__(m, "rows", tuple(tuple(r) for r in rows))
        return m

    def _integer_form(self) -> tuple[list[list[int]], int]:
        """``(A, d)`` with integer ``A`` and ``self = A / d``."""
        d = 1
        for r in self.rows:
            for x in r:
                if x.denominator != 1:
                    d = lcm(d, x.denominator)
        return [[x.numerator * (d // x.denominator) for x in r] for r in self.rows], d

    def __matmul__(self, other):
        # integer products with one normalisation per entry
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            A, da = self._integer_form()
            B, db = other._integer_form()
            cols = list(zip(*B))
            d = da * db
            return Matrix._trusted(
                [[Fraction(sum(a * b for a, b in zip(r, c)), d) for c in cols] for r in A])
        v = tuple(other)
        if self.ncols != len(v):
            raise DimensionMismatch(f"{self.shape} @ vector of length {len(v)}")
        return tuple(dot(r, v) for r in self.rows)

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([vadd(a, b) for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([vsub(a, b) for a, b in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in r] for r in self.rows])

    def __mul__(self, c: Number) -> "Matrix":
        c = scalar(c)
        return Matrix([[c * x for x in r] for r in self.rows])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_scalar(x) for x in r) + "]" for r in self.rows)
        return f"Matrix([{body}])"

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_diagonal(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.nrows) for j in range(self.ncols) if i != j)

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def max_abs(self) -> Fraction:
        return max((abs(x) for r in self.rows for x in r), default=Fraction(0))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self.rows[i][j] for j in cols] for i in rows])

    def to_strings(self) -> list[list[str]]:
        return [[format_scalar(x) for x in r] for r in self.rows]


def _integer_rows(m: Matrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (row scaling keeps rank/kernel)."""
    out = []
    for r in m.rows:
        den = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def _bareiss_echelon(a: list[list[int]]) -> tuple[list[list[int]], list[int], int]:
    """Fraction-free row echelon form.

    Returns the echelon rows, pivot columns and the sign of the row permutation.
    Every intermediate value is an integer (Bareiss' exact division step).
    """
    a = [row[:] for row in a]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    sign = 1
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            sign = -sign
        piv = a[r][c]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                a[i][j] = (a[i][j] * piv - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        # Sylvester's identity keeps the division exact for any pivot columns.
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots, sign


def determinant(m: Matrix) -> Fraction:
    if not m.is_square():
        raise DimensionMismatch(f"determinant of {m.shape} matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    dens = [lcm(*(x.denominator for x in r)) for r in m.rows]
    rows = [[int(x * d) for x in r] for r, d in zip(m.rows, dens)]
    ech, pivots, sign = _bareiss_echelon(rows)
    if len(pivots) < n:
        return Fraction(0)
    scale = 1
    for d in dens:
        scale *= d
    # With no skipped columns the last pivot of a Bareiss elimination is det.
    return Fraction(sign * ech[n - 1][n - 1], scale)


def rank(m: Matrix) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    _, pivots, _ = _bareiss_echelon(_integer_rows(m))
    return len(pivots)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (nonzero rows only) and its pivot columns."""
    if m.nrows == 0 or m.ncols == 0:
        return Matrix([]), []
    ech, pivots, _ = _bareiss_echelon(_integer_rows(m))
    rows = [[Fraction(x) for x in ech[i]] for i in range(len(pivots))]
    for i, c in enumerate(pivots):
        p = rows[i][c]
        rows[i] = [x / p for x in rows[i]]
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        for k in range(i):
            f = rows[k][c]
            if f:
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[i])]
    return Matrix(rows) if rows else Matrix([]), pivots


def kernel(m: Matrix) -> list[Vector]:
    """Basis of the null space, one vector per free column (free entry set to 1)."""
    ncols = m.ncols
    red, pivots = rref(m)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i, f]
        basis.append(tuple(v))
    return basis


def invert(m: Matrix) -> Matrix:
    if not m.is_square():
        raise SingularMatrix(f"cannot invert a {m.shape} matrix")
    n = m.nrows
    aug = Matrix([list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(m.rows)])
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return Matrix([r[n:] for r in red.rows])


def solve(m: Matrix, b: Sequence[Fraction]) -> tuple[Vector, list[Vector]] | None:
    """Solve ``m x = b``: a particular solution and the kernel, or None if inconsistent."""
    n = m.ncols
    aug = Matrix([list(r) + [bi] for r, bi in zip(m.rows, b)])
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = red[i, n]
    return tuple(x), kernel(m)


def is_positive_definite(m: Matrix) -> bool:
    """Sylvester's criterion on exact leading principal minors."""
    if not m.is_symmetric():
        raise NotSymmetric("positive definiteness needs a symmetric matrix")
    n = m.nrows
    return all(determinant(m.submatrix(range(k), range(k))) > 0 for k in range(1, n + 1))


def inertia(m: Matrix) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric form, by congruence.

    Symmetric Gaussian reduction: pivot on a nonzero diagonal entry, or
    create one from an off-diagonal entry with ``e_i -> e_i + e_j``.
    """
    if not m.is_symmetric():
        raise NotSymmetric("inertia needs a symmetric matrix")
    a = [list(r) for r in m.rows]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if a[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            k = i
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            f = a[i][k] / p
            if f:
                for t in range(n):
                    a[i][t] -= f * a[k][t]
        for i in active:
            a[k][i] = Fraction(0)
            a[i][k] = Fraction(0)
    return pos, neg, n - pos - neg


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root when ``x`` is the square of a rational, else None."""
    from math import isqrt

    x = Fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None
