"""Lie algebras given by structure constants, and their algebraic invariants.

Basis vectors are 0-based internally.  Constructors that mirror the usual
notation (``e_1, ..., e_n`` and the dual ``e^1, ..., e^n``) take 1-based indices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .errors import DimensionMismatch, InvalidLieAlgebra, ParseError
from .exact import (
    Matrix,
    Number,
    Vector,
    inertia,
    invert,
    kernel,
    rank,
    rref,
    scalar,
    zero_vector,
)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace, stored by its reduced row echelon basis.

    The basis is canonical, so two subspaces are equal exactly when their
    spans agree.
    """

    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, vectors: Sequence[Sequence[Fraction]], ambient_dim: int) -> "Subspace":
        vecs = [tuple(v) for v in vectors]
        if any(len(v) != ambient_dim for v in vecs):
            raise DimensionMismatch("vector length differs from ambient dimension")
        if not vecs:
            return cls(ambient_dim, ())
        red, _ = rref(Matrix(vecs))
        return cls(ambient_dim, tuple(red.rows))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[Fraction]) -> bool:
        if not self.basis:
            return all(x == 0 for x in v)
        return rank(Matrix(list(self.basis) + [tuple(v)])) == self.dim

    def transform(self, m: Matrix) -> "Subspace":
        return Subspace.span([m @ b for b in self.basis], m.nrows)


class LieAlgebra:
    """Finite-dimensional real Lie algebra with rational structure constants.

    ``brackets`` maps 0-based pairs ``(i, j)`` with ``i < j`` to the coordinate
    vector of ``[e_i, e_j]``.  Only these pairs are stored; ``[e_j, e_i]`` is
    always the negative.  With ``check=True`` (the default) the Jacobi
    identity is enforced.
    """

    __slots__ = ("dim", "_table")

    def __init__(self, dim: int, brackets: Mapping[tuple[int, int], Sequence[Number]] = (), check: bool = True):
        table = [[zero_vector(dim) for _ in range(dim)] for _ in range(dim)]
        items = brackets.items() if isinstance(brackets, Mapping) else brackets
        for (i, j), vec in items:
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket index pair {(i, j)} must satisfy 0 <= i < j < {dim}")
            v = tuple(scalar(x) for x in vec)
            if len(v) != dim:
                raise DimensionMismatch(f"bracket [{i},{j}] has {len(v)} coordinates")
            table[i][j] = v
            table[j][i] = tuple(-x for x in v)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_table", tuple(tuple(r) for r in table))
        if check:
            bad = jacobi_violation(self)
            if bad is not None:
                i, j, k = bad
                raise InvalidLieAlgebra(f"jacobi ({i + 1},{j + 1},{k + 1})")

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls(dim)

    @classmethod
    def from_brackets(cls, dim: int, spec: Mapping[tuple[int, int], Mapping[int, Number]], check: bool = True) -> "LieAlgebra":
        """Build from 1-based data ``{(i, j): {k: c}}`` meaning ``[e_i, e_j] = sum c e_k``.

        Pairs with ``i > j`` are accepted and negated.
        """
        acc: dict[tuple[int, int], list[Fraction]] = {}
        for (i, j), coeffs in spec.items():
            if i == j:
                if any(scalar(c) != 0 for c in coeffs.values()):
                    raise ValueError(f"[e_{i}, e_{i}] must vanish")
                continue
            sign = 1 if i < j else -1
            key = (min(i, j) - 1, max(i, j) - 1)
            vec = acc.setdefault(key, [Fraction(0)] * dim)
            for k, c in coeffs.items():
                vec[k - 1] += sign * scalar(c)
        return cls(dim, {k: v for k, v in acc.items()}, check=check)

    @classmethod
    def from_differentials(cls, diffs: Sequence[Mapping[tuple[int, int], Number]], check: bool = True) -> "LieAlgebra":
        """Build from ``de^k = sum d^k_ij e^{ij}`` (1-based pairs), using ``de^k(X, Y) = -e^k([X, Y])``."""
        dim = len(diffs)
        acc: dict[tuple[int, int], list[Fraction]] = {}
        for k, dk in enumerate(diffs):
            for (i, j), c in dk.items():
                c = scalar(c)
                if i == j or c == 0:
                    continue
                sign = 1 if i < j else -1
                key = (min(i, j) - 1, max(i, j) - 1)
                acc.setdefault(key, [Fraction(0)] * dim)[k] -= sign * c
        return cls(dim, acc, check=check)

    def c(self, i: int, j: int) -> Vector:
        """Coordinates of ``[e_i, e_j]`` (0-based)."""
        return self._table[i][j]

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                if y[j] == 0 or i == j:
                    continue
                f = x[i] * y[j]
                for k, ck in enumerate(self._table[i][j]):
                    if ck:
                        out[k] += f * ck
        return tuple(out)

    def nonzero_brackets(self) -> dict[tuple[int, int], Vector]:
        return {(i, j): self._table[i][j] for i, j in combinations(range(self.dim), 2) if any(self._table[i][j])}

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self._table == other._table

    def __hash__(self) -> int:
        return hash((self.dim, self._table))

    def __repr__(self) -> str:
        parts = []
        for (i, j), v in self.nonzero_brackets().items():
            terms = " + ".join(f"{c}*e{k + 1}" for k, c in enumerate(v) if c)
            parts.append(f"[e{i + 1},e{j + 1}]={terms}")
        return f"LieAlgebra(dim={self.dim}; " + ", ".join(parts) + ")"


_TERM_RE = re.compile(r"([+-]?)\s*((?:\d+(?:/\d+)?)?)\s*\*?\s*e\^?\{?(\d)(\d)\}?")


def parse_structure_equations(text: str, check: bool = True) -> LieAlgebra:
    """Parse the compact notation ``(0,-e^{12},0,0,e^{12}+e^{34})``.

    Entry ``k`` lists ``de^k``; coefficients may be integers or ``p/q``.
    """
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError(f"structure equations must be parenthesised: {text!r}")
    entries = [s.strip() for s in body[1:-1].split(",")]
    diffs = []
    for entry in entries:
        dk: dict[tuple[int, int], Fraction] = {}
        compact = entry.replace(" ", "").replace("\\frac", "")
        if compact in ("0", ""):
            diffs.append(dk)
            continue
        pos = 0
        for m in _TERM_RE.finditer(compact):
            if m.start() != pos:
                raise ParseError(f"cannot parse {entry!r}")
            pos = m.end()
            sign = -1 if m.group(1) == "-" else 1
            coeff = scalar(m.group(2)) if m.group(2) else Fraction(1)
            key = (int(m.group(3)), int(m.group(4)))
            dk[key] = dk.get(key, Fraction(0)) + sign * coeff
        if pos != len(compact):
            raise ParseError(f"cannot parse {entry!r}")
        diffs.append(dk)
    return LieAlgebra.from_differentials(diffs, check=check)


def _jacobi_vector(L: LieAlgebra, i: int, j: int, k: int) -> Vector:
    n = L.dim
    e = [tuple(Fraction(int(a == b)) for a in range(n)) for b in range(n)]
    t1 = L.bracket(L.c(i, j), e[k])
    t2 = L.bracket(L.c(j, k), e[i])
    t3 = L.bracket(L.c(k, i), e[j])
    return tuple(a + b + c for a, b, c in zip(t1, t2, t3))


def jacobi_violation(L: LieAlgebra) -> tuple[int, int, int] | None:
    """First basis triple (0-based, increasing) where the Jacobi identity fails."""
    for i, j, k in combinations(range(L.dim), 3):
        if any(_jacobi_vector(L, i, j, k)):
            return i, j, k
    return None


def jacobi_defect(L: LieAlgebra) -> Fraction:
    """Largest absolute component of the cyclic Jacobi sum over basis triples."""
    worst = Fraction(0)
    for i, j, k in combinations(range(L.dim), 3):
        for x in _jacobi_vector(L, i, j, k):
            worst = max(worst, abs(x))
    return worst


def ad(L: LieAlgebra, x: Sequence[Fraction]) -> Matrix:
    """Matrix of ``Y -> [X, Y]``; column ``j`` holds ``[X, e_j]``."""
    if len(x) != L.dim:
        raise DimensionMismatch("vector length differs from algebra dimension")
    n = L.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j in range(n):
            for k, ck in enumerate(L.c(i, j)):
                if ck:
                    rows[k][j] += xi * ck
    return Matrix(rows)


def center(L: LieAlgebra) -> Subspace:
    n = L.dim
    # Row (j, k): sum_i x^i c^k_{ij} = 0.
    rows = [[L.c(i, j)[k] for i in range(n)] for j in range(n) for k in range(n)]
    if not rows:
        return Subspace(0, ())
    return Subspace.span(kernel(Matrix(rows)), n)


def bracket_span(L: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    return Subspace.span([L.bracket(x, y) for x in a.basis for y in b.basis], L.dim)


def derived_algebra(L: LieAlgebra) -> Subspace:
    return Subspace.span([L.c(i, j) for i, j in combinations(range(L.dim), 2)], L.dim)


def derived_series(L: LieAlgebra) -> tuple[int, ...]:
    """Dimensions of g, [g,g], [[g,g],[g,g]], ... until the series stabilises."""
    current = Subspace.span([tuple(Fraction(int(a == b)) for a in range(L.dim)) for b in range(L.dim)], L.dim)
    dims = [current.dim]
    while True:
        nxt = bracket_span(L, current, current)
        if nxt.dim == current.dim:
            return tuple(dims)
        dims.append(nxt.dim)
        current = nxt


def is_unimodular(L: LieAlgebra) -> bool:
    n = L.dim
    return all(sum((L.c(i, k)[k] for k in range(n)), Fraction(0)) == 0 for i in range(n))


def killing_form(L: LieAlgebra) -> Matrix:
    n = L.dim
    ads = [ad(L, tuple(Fraction(int(a == b)) for a in range(n))) for b in range(n)]
    return Matrix([[(ads[i] @ ads[j]).trace() for j in range(n)] for i in range(n)])


def change_basis(L: LieAlgebra, P: Matrix) -> LieAlgebra:
    """Structure constants in the basis ``f_a = sum_i P[i, a] e_i`` (columns of P).

    Raises SingularMatrix when P is not invertible.
    """
    if P.shape != (L.dim, L.dim):
        raise DimensionMismatch(f"basis matrix {P.shape} for a {L.dim}-dimensional algebra")
    Pinv = invert(P)
    cols = P.columns()
    new = {}
    for a, b in combinations(range(L.dim), 2):
        v = Pinv @ L.bracket(cols[a], cols[b])
        if any(v):
            new[(a, b)] = v
    return LieAlgebra(L.dim, new, check=False)


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism invariants.  Equal fingerprints are necessary, not sufficient."""

    dim: int
    center_dim: int
    derived_series: tuple
    unimodular: bool
    killing_rank: int
    killing_signature: tuple  # (positive, negative)


def invariant_fingerprint(L: LieAlgebra) -> Fingerprint:
    K = killing_form(L)
    pos, neg, _ = inertia(K)
    return Fingerprint(
        dim=L.dim,
        center_dim=center(L).dim,
        derived_series=derived_series(L),
        unimodular=is_unimodular(L),
        killing_rank=rank(K),
        killing_signature=(pos, neg),
    )
