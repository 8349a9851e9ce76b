"""Alternating forms on a Lie algebra and the Chevalley-Eilenberg differential.

A k-form is stored by its components on increasing 0-based multi-indices.
Evaluation uses the determinant convention

    e^{i_1...i_k}(X_1, ..., X_k) = det[e^{i_r}(X_s)],

so ``e^{12}(e_1, e_2) = 1`` and no ``1/k!`` factors appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import DegreeOverflow, DimensionMismatch, EvenDimension, NotContact
from .exact import Matrix, Number, Vector, determinant, rank, scalar, solve
from .lie import LieAlgebra


def _sort_sign(indices: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting ``indices``; 0 on a repeated index."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for a in range(1, len(idx)):
        b = a
        while b > 0 and idx[b - 1] > idx[b]:
            idx[b - 1], idx[b] = idx[b], idx[b - 1]
            sign = -sign
            b -= 1
    return sign, tuple(idx)


def _parse_label(label: str, dim: int) -> tuple[int, ...]:
    digits = label.strip()
    if not digits.isdigit():
        raise ValueError(f"form label {label!r} must be a string of 1-based indices such as '14'")
    idx = [int(ch) - 1 for ch in digits]
    if any(not 0 <= i < dim for i in idx):
        raise DimensionMismatch(f"label {label!r} out of range for dimension {dim}")
    return tuple(idx)


class KForm:
    """An alternating k-form on ``R^n`` with exact components."""

    __slots__ = ("ambient_dim", "degree", "_c")

    def __init__(self, ambient_dim: int, degree: int, components: Mapping[tuple[int, ...], Number] | None = None):
        if not 0 <= degree:
            raise ValueError("degree must be non-negative")
        if degree > ambient_dim:
            raise DegreeOverflow(f"degree {degree} exceeds dimension {ambient_dim}")
        comps: dict[tuple[int, ...], Fraction] = {}
        for key, val in (components or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise ValueError(f"index {key} does not have length {degree}")
            if any(not 0 <= i < ambient_dim for i in key):
                raise DimensionMismatch(f"index {key} out of range for dimension {ambient_dim}")
            sign, skey = _sort_sign(key)
            v = scalar(val)
            if sign == 0 or v == 0:
                continue
            comps[skey] = comps.get(skey, Fraction(0)) + sign * v
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_c", {k: v for k, v in comps.items() if v != 0})

    def __setattr__(self, name, value):
        raise AttributeError("KForm is immutable")

    # construction helpers

    @classmethod
    def zero(cls, dim: int, degree: int) -> "KForm":
        return cls(dim, degree)

    @classmethod
    def from_labels(cls, dim: int, comps: Mapping[str, Number]) -> "KForm":
        """``KForm.from_labels(4, {"12": 1, "34": -2})`` is ``e^{12} - 2 e^{34}``."""
        if not comps:
            raise ValueError("cannot infer the degree of an empty label map; use KForm.zero")
        parsed = {_parse_label(k, dim): v for k, v in comps.items()}
        degrees = {len(k) for k in parsed}
        if len(degrees) != 1:
            raise ValueError("mixed degrees in label map")
        return cls(dim, degrees.pop(), parsed)

    @classmethod
    def basis(cls, dim: int, label: str) -> "KForm":
        return cls.from_labels(dim, {label: 1})

    @classmethod
    def from_covector(cls, v: Sequence[Number]) -> "KForm":
        return cls(len(v), 1, {(i,): x for i, x in enumerate(v)})

    @classmethod
    def from_matrix(cls, w: Matrix) -> "KForm":
        """2-form with ``w(e_i, e_j) = W[i, j]``; W must be antisymmetric."""
        n = w.nrows
        if w.shape != (n, n) or (w + w.T) != Matrix.zeros(n, n):
            raise ValueError("a 2-form matrix must be square and antisymmetric")
        return cls(n, 2, {(i, j): w[i, j] for i, j in combinations(range(n), 2)})

    # access

    @property
    def components(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._c)

    def __getitem__(self, key: Sequence[int]) -> Fraction:
        sign, skey = _sort_sign(key)
        if sign == 0:
            return Fraction(0)
        return sign * self._c.get(skey, Fraction(0))

    def to_labels(self) -> dict[str, Fraction]:
        return {"".join(str(i + 1) for i in k): v for k, v in sorted(self._c.items())}

    def covector(self) -> Vector:
        if self.degree != 1:
            raise ValueError("covector() requires a 1-form")
        return tuple(self._c.get((i,), Fraction(0)) for i in range(self.ambient_dim))

    def matrix(self) -> Matrix:
        """Antisymmetric matrix ``W[i, j] = w(e_i, e_j)`` of a 2-form."""
        if self.degree != 2:
            raise ValueError("matrix() requires a 2-form")
        n = self.ambient_dim
        return Matrix([[self[(i, j)] for j in range(n)] for i in range(n)])

    def __call__(self, *vectors: Sequence[Fraction]) -> Fraction:
        if len(vectors) != self.degree:
            raise ValueError(f"a {self.degree}-form takes {self.degree} arguments")
        if any(len(v) != self.ambient_dim for v in vectors):
            raise DimensionMismatch("argument length differs from ambient dimension")
        if self.degree == 0:
            return self._c.get((), Fraction(0))
        if self.degree == 2:
            x, y = vectors
            return sum((c * (x[i] * y[j] - x[j] * y[i]) for (i, j), c in self._c.items()), Fraction(0))
        total = Fraction(0)
        for idx, c in self._c.items():
            total += c * determinant(Matrix([[v[i] for v in vectors] for i in idx]))
        return total

    # algebra

    def _check(self, other: "KForm") -> None:
        if not isinstance(other, KForm):
            raise TypeError("expected a KForm")
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("forms live on spaces of different dimension")

    def __add__(self, other: "KForm") -> "KForm":
        self._check(other)
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, Fraction(0)) + v
        return KForm(self.ambient_dim, self.degree, out)

    def __neg__(self) -> "KForm":
        return KForm(self.ambient_dim, self.degree, {k: -v for k, v in self._c.items()})

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def __mul__(self, s: Number) -> "KForm":
        s = scalar(s)
        return KForm(self.ambient_dim, self.degree, {k: s * v for k, v in self._c.items()})

    __rmul__ = __mul__

    def __xor__(self, other: "KForm") -> "KForm":
        return wedge(self, other)

    def is_zero(self) -> bool:
        return not self._c

    def max_abs(self) -> Fraction:
        return max((abs(v) for v in self._c.values()), default=Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KForm)
            and self.ambient_dim == other.ambient_dim
            and self.degree == other.degree
            and self._c == other._c
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.degree, tuple(sorted(self._c.items()))))

    def __repr__(self) -> str:
        if not self._c:
            return f"KForm(0, dim={self.ambient_dim}, degree={self.degree})"
        terms = " + ".join(f"{v}*e^{k}" for k, v in self.to_labels().items())
        return f"KForm({terms})"


@dataclass(frozen=True)
class ComplexTwoForm:
    """``real_part + i * imag_part``, both real 2-forms."""

    real_part: KForm
    imag_part: KForm

    def __post_init__(self):
        if self.real_part.degree != 2 or self.imag_part.degree != 2:
            raise ValueError("both parts must be 2-forms")
        if self.real_part.ambient_dim != self.imag_part.ambient_dim:
            raise DimensionMismatch("real and imaginary parts differ in dimension")

    def wedge_conjugate(self) -> KForm:
        """``eps ^ conj(eps)``; the cross terms cancel because 2-forms commute."""
        a, b = self.real_part, self.imag_part
        return wedge(a, a) + wedge(b, b)


def wedge(a: KForm, b: KForm) -> KForm:
    a._check(b)
    n = a.ambient_dim
    if a.degree + b.degree > n:
        raise DegreeOverflow(f"degree {a.degree + b.degree} exceeds dimension {n}")
    out: dict[tuple[int, ...], Fraction] = {}
    for i, x in a._c.items():
        for j, y in b._c.items():
            sign, k = _sort_sign(i + j)
            if sign:
                out[k] = out.get(k, Fraction(0)) + sign * x * y
    return KForm(n, a.degree + b.degree, out)


def wedge_power(a: KForm, p: int) -> KForm:
    out = KForm(a.ambient_dim, 0, {(): 1})
    for _ in range(p):
        out = wedge(out, a)
    return out


def _contract_first(a: KForm, x: Sequence[Fraction], rest: tuple[int, ...]) -> Fraction:
    """``a(x, e_rest)`` for an increasing (or arbitrary) index tuple ``rest``."""
    return sum((xm * a[(m,) + rest] for m, xm in enumerate(x) if xm), Fraction(0))


def interior(x: Sequence[Number], a: KForm) -> KForm:
    """``(i_X a)(Y_1, ...) = a(X, Y_1, ...)``."""
    x = tuple(scalar(v) for v in x)
    if len(x) != a.ambient_dim:
        raise DimensionMismatch("vector length differs from form dimension")
    if a.degree == 0:
        return KForm(a.ambient_dim, 0)
    n = a.ambient_dim
    return KForm(n, a.degree - 1, {J: _contract_first(a, x, J) for J in combinations(range(n), a.degree - 1)})


def exterior_derivative(L: LieAlgebra, a: KForm) -> KForm:
    """``da(X_0..X_k) = sum_{i<j} (-1)^{i+j} a([X_i, X_j], X_0..^i..^j..X_k)``.

    On 1-forms this is ``da(X, Y) = -a([X, Y])``.
    """
    if a.ambient_dim != L.dim:
        raise DimensionMismatch("form and algebra dimensions differ")
    n, k = L.dim, a.degree
    if k + 1 > n:
        raise DegreeOverflow(f"d of a degree-{k} form on a {n}-dimensional algebra")
    out = {}
    for I in combinations(range(n), k + 1):
        total = Fraction(0)
        for p, q in combinations(range(k + 1), 2):
            br = L.c(I[p], I[q])
            if not any(br):
                continue
            rest = I[:p] + I[p + 1:q] + I[q + 1:]
            val = _contract_first(a, br, rest)
            total += val if (p + q) % 2 == 0 else -val
        out[I] = total
    return KForm(n, k + 1, out)


def lie_derivative_form(L: LieAlgebra, x: Sequence[Number], a: KForm) -> KForm:
    """Lie derivative along a left-invariant field via ``L_X = d i_X + i_X d``."""
    if a.degree == 0:
        return KForm(a.ambient_dim, 0)
    first = exterior_derivative(L, interior(x, a))
    if a.degree == a.ambient_dim:
        return first
    return first + interior(x, exterior_derivative(L, a))


def two_form_rank(w: KForm) -> int:
    if w.degree != 2:
        raise ValueError("two_form_rank requires a 2-form")
    return rank(w.matrix())


def is_contact(L: LieAlgebra, eta: KForm) -> bool:
    """True iff ``eta ^ (d eta)^n`` is a volume form on the ``(2n+1)``-dimensional algebra."""
    if L.dim % 2 == 0:
        raise EvenDimension(f"contact forms need odd dimension, got {L.dim}")
    if eta.degree != 1:
        raise ValueError("eta must be a 1-form")
    n = (L.dim - 1) // 2
    top = wedge(eta, wedge_power(exterior_derivative(L, eta), n))
    return not top.is_zero()


def reeb_vector(L: LieAlgebra, eta: KForm) -> Vector:
    """The unique ``xi`` with ``eta(xi) = 1`` and ``d eta(xi, .) = 0``."""
    if eta.degree != 1 or eta.ambient_dim != L.dim:
        raise DimensionMismatch("eta must be a 1-form on the algebra")
    W = exterior_derivative(L, eta).matrix()
    # rows of W^T give d eta(xi, e_j) = sum_i xi^i W[i, j]
    rows = [list(W.col(j)) for j in range(L.dim)] + [list(eta.covector())]
    rhs = [Fraction(0)] * L.dim + [Fraction(1)]
    sol = solve(Matrix(rows), rhs)
    if sol is None or sol[1]:
        raise NotContact("the Reeb system has no unique solution")
    return tuple(sol[0])


def structure_equations(L: LieAlgebra) -> list[KForm]:
    """``[d e^1, ..., d e^n]``."""
    n = L.dim
    return [exterior_derivative(L, KForm(n, 1, {(k,): 1})) for k in range(n)]


def _format_term(coeff: Fraction, label: str, first: bool) -> str:
    sign = "-" if coeff < 0 else ("" if first else "+")
    mag = abs(coeff)
    num = "" if mag == 1 else f"{mag}"
    return f"{sign}{num}e^{{{label}}}"


def format_structure_equations(L: LieAlgebra) -> str:
    """Compact notation such as ``(0,-e^{13},e^{12},0)``."""
    parts = []
    for f in structure_equations(L):
        labels = f.to_labels()
        if not labels:
            parts.append("0")
            continue
        parts.append("".join(_format_term(c, lab, i == 0) for i, (lab, c) in enumerate(labels.items())))
    return "(" + ",".join(parts) + ")"


def forms_max_diff(pairs: Iterable[tuple[KForm, KForm]]) -> Fraction:
    return max(((a - b).max_abs() for a, b in pairs), default=Fraction(0))
