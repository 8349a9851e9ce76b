"""Left-invariant Riemannian geometry on a metric Lie algebra.

Conventions (everything downstream depends on these):

* ``[e_i, e_j] = sum_k c^k_ij e_k`` and ``g_ij = g(e_i, e_j)``.
* Levi-Civita connection from the Koszul formula
  ``2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)``.
* ``R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z`` and
  ``R(X,Y,Z,W) = g(R(X,Y)Z, W)``.
* ``Ric(Y,Z) = sum g^ab R(e_a,Y,Z,e_b)``, the trace of ``X -> R(X,Y)Z``.

Orthonormal frames never appear: every trace is a contraction with ``g^-1``,
so all results stay rational.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, InvalidStructure, NonDiagonalMetric
from .exact import Matrix, Vector, dot, imatmul, invert, is_positive_definite, lcm_denominator, rational_sqrt, scalar
from .lie import LieAlgebra, change_basis


class MetricLieAlgebra:
    """A Lie algebra with a positive-definite inner product, ``g[i, j] = g(e_i, e_j)``."""

    __slots__ = ("L", "g", "g_inv")

    def __init__(self, L: LieAlgebra, g: Matrix):
        if g.shape != (L.dim, L.dim):
            raise DimensionMismatch(f"metric of shape {g.shape} on a {L.dim}-dimensional algebra")
        if not is_positive_definite(g):
            raise InvalidStructure("metric is not positive definite")
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "g_inv", invert(g))

    def __setattr__(self, name, value):
        raise AttributeError("MetricLieAlgebra is immutable")

    @property
    def dim(self) -> int:
        return self.L.dim

    def inner(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        return dot(x, self.g @ tuple(y))

    def lower(self, x: Sequence[Fraction]) -> Vector:
        """The covector ``g(x, .)``."""
        return self.g @ tuple(x)

    def change_basis(self, P: Matrix) -> "MetricLieAlgebra":
        return MetricLieAlgebra(change_basis(self.L, P), P.T @ self.g @ P)

    def __eq__(self, other) -> bool:
        return isinstance(other, MetricLieAlgebra) and self.L == other.L and self.g == other.g

    def __hash__(self) -> int:
        return hash((self.L, self.g))

    def __repr__(self) -> str:
        return f"MetricLieAlgebra({self.L!r}, g={self.g.to_strings()})"


@dataclass(frozen=True)
class Connection:
    """``gamma[i][j]`` is the coordinate vector of ``nabla_{e_i} e_j``."""

    gamma: tuple

    @property
    def dim(self) -> int:
        return len(self.gamma)

    def nabla(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                f = x[i] * y[j]
                for k, v in enumerate(self.gamma[i][j]):
                    if v:
                        out[k] += f * v
        return tuple(out)

    def matrix(self, i: int) -> Matrix:
        """Matrix of ``Y -> nabla_{e_i} Y``; column ``j`` is ``nabla_{e_i} e_j``."""
        return Matrix.from_columns(self.gamma[i])

    def operator(self, x: Sequence[Fraction]) -> Matrix:
        n = self.dim
        out = Matrix.zeros(n, n)
        for i, xi in enumerate(x):
            if xi:
                out = out + self.matrix(i) * xi
        return out


def _koszul_integer(M: MetricLieAlgebra) -> tuple[list, int]:
    """``(K, d)`` with integer ``K[i][j][k] = d * g(nabla_{e_i} e_j, e_k)``."""
    n = M.dim
    L = M.L
    G, dg = M.g._integer_form()
    dc = lcm_denominator(x for i in range(n) for j in range(i + 1, n) for x in L.c(i, j))
    # gb[i][j][k] = dg * dc * g([e_i, e_j], e_k)
    gb = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            cij = [int(x * dc) for x in L.c(i, j)]
            if any(cij):
                v = [sum(G[k][m] * cij[m] for m in range(n)) for k in range(n)]
                gb[i][j] = v
                gb[j][i] = [-x for x in v]
    K = [[[gb[i][j][k] - gb[j][k][i] + gb[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]
    return K, 2 * dg * dc


def koszul_lowered(M: MetricLieAlgebra) -> list[list[list[Fraction]]]:
    """``G[i][j][k] = g(nabla_{e_i} e_j, e_k)``, from ``2g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)``."""
    K, d = _koszul_integer(M)
    return [[[Fraction(x, d) for x in r] for r in Ki] for Ki in K]


def levi_civita(M: MetricLieAlgebra) -> Connection:
    n = M.dim
    K, d = _koszul_integer(M)
    Gi, dgi = M.g_inv._integer_form()
    den = d * dgi
    # row j of K_i g^-1 is nabla_{e_i} e_j (g^-1 is symmetric)
    gamma = tuple(tuple(tuple(Fraction(x, den) for x in r) for r in imatmul(K[i], Gi)) for i in range(n))
    return Connection(gamma)


@dataclass(frozen=True)
class Curvature:
    """``ops[i][j]`` is the matrix of ``R(e_i, e_j)``; ``R[i][j][k][l] = g(R(e_i,e_j)e_k, e_l)``."""

    ops: tuple
    R: tuple

    def operator(self, i: int, j: int) -> Matrix:
        return self.ops[i][j]

    def __getitem__(self, idx: tuple[int, int, int, int]) -> Fraction:
        i, j, k, l = idx
        return self.R[i][j][k][l]

    def is_zero(self) -> bool:
        return all(op.is_zero() for row in self.ops for op in row)


def curvature(M: MetricLieAlgebra, conn: Connection | None = None) -> Curvature:
    """``R(e_i, e_j) = N_i N_j - N_j N_i - sum_k c^k_ij N_k`` with ``N_i = nabla_{e_i}``.

    Evaluated over a common denominator in integer arithmetic.
    """
    conn = conn or levi_civita(M)
    n = M.dim
    L = M.L
    N = [conn.matrix(i) for i in range(n)]
    dn = lcm_denominator(x for m in N for r in m.rows for x in r)
    dc = lcm_denominator(x for i in range(n) for j in range(i + 1, n) for x in L.c(i, j))
    Ni = [[[x.numerator * (dn // x.denominator) for x in r] for r in m.rows] for m in N]
    G, dg = M.g._integer_form()
    den = dn * dn * dc
    zero = Matrix.zeros(n, n)
    ops = [[zero] * n for _ in range(n)]
    gops = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            ab, ba = imatmul(Ni[i], Ni[j]), imatmul(Ni[j], Ni[i])
            T = [[(x - y) * dc for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]
            for k, ck in enumerate(L.c(i, j)):
                if ck:
                    f = int(ck * dc) * dn
                    T = [[t - f * x for t, x in zip(tr, nr)] for tr, nr in zip(T, Ni[k])]
            ops[i][j] = Matrix._trusted([[Fraction(t, den) for t in r] for r in T])
            ops[j][i] = -ops[i][j]
            gT = imatmul(G, T)
            gops[i][j] = [[Fraction(t, den * dg) for t in r] for r in gT]
    z = Fraction(0)
    R = []
    for i in range(n):
        Ri = []
        for j in range(n):
            if i == j:
                Ri.append(tuple(tuple(z for _ in range(n)) for _ in range(n)))
            elif i < j:
                gop = gops[i][j]
                Ri.append(tuple(tuple(gop[l][k] for l in range(n)) for k in range(n)))
            else:
                gop = gops[j][i]
                Ri.append(tuple(tuple(-gop[l][k] for l in range(n)) for k in range(n)))
        R.append(tuple(Ri))
    return Curvature(tuple(tuple(r) for r in ops), tuple(R))


def riemann(M: MetricLieAlgebra) -> tuple:
    """Fully covariant tensor ``R[i][j][k][l] = g(R(e_i,e_j)e_k, e_l)``."""
    return curvature(M).R


def is_flat(M: MetricLieAlgebra) -> bool:
    return curvature(M).is_zero()


@dataclass(frozen=True)
class RicciForm:
    """Symmetric matrix ``rho[i, j] = Ric(e_i, e_j)`` in the defining basis."""

    entries: Matrix

    def __call__(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        return dot(x, self.entries @ tuple(y))

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        return self.entries[idx]

    def is_zero(self) -> bool:
        return self.entries.is_zero()

    def to_strings(self) -> list[list[str]]:
        return self.entries.to_strings()


def ricci(M: MetricLieAlgebra, curv: Curvature | None = None) -> RicciForm:
    curv = curv or curvature(M)
    n = M.dim
    gi = M.g_inv
    flat = [gi[a, b] for a in range(n) for b in range(n)]
    R = curv.R
    rows = [[dot(flat, [R[a][y][z][b] for a in range(n) for b in range(n)]) for z in range(n)] for y in range(n)]
    return RicciForm(Matrix(rows))


def contract(M: MetricLieAlgebra, form: Matrix) -> Fraction:
    """``sum g^ij form_ij``."""
    n = M.dim
    return sum((M.g_inv[i, j] * form[i, j] for i in range(n) for j in range(n)), Fraction(0))


def scalar_curvature(M: MetricLieAlgebra, ric: RicciForm | None = None) -> Fraction:
    return contract(M, (ric or ricci(M)).entries)


@dataclass(frozen=True)
class FrameRicci:
    """Ricci components in the orthonormal frame ``e_i / sqrt(g_ii)`` of a diagonal metric.

    ``values[i][j]`` is a Fraction when ``g_ii g_jj`` is a rational square,
    otherwise ``None``; those pairs are listed in ``symbolic`` as
    ``(rho_ij, g_ii * g_jj)`` meaning ``rho_ij / sqrt(g_ii g_jj)``.
    """

    values: tuple
    symbolic: dict = field(default_factory=dict)

    def diagonal(self) -> tuple:
        return tuple(self.values[i][i] for i in range(len(self.values)))

    def matrix(self) -> Matrix:
        if self.symbolic:
            raise ValueError("frame Ricci has irrational entries; see .symbolic")
        return Matrix(self.values)


def frame_ricci(M: MetricLieAlgebra, scale: Sequence | None = None, ric: RicciForm | None = None) -> FrameRicci:
    n = M.dim
    if not M.g.is_diagonal():
        raise NonDiagonalMetric("an orthonormal frame by rescaling needs a diagonal metric")
    if scale is not None:
        scale = [scalar(s) for s in scale]
        if len(scale) != n:
            raise DimensionMismatch("one scale factor per basis vector is required")
        for i, s in enumerate(scale):
            if s * s != M.g[i, i]:
                raise ValueError(f"scale[{i}]^2 = {s * s} differs from g_{i + 1}{i + 1} = {M.g[i, i]}")
    rho = (ric or ricci(M)).entries
    values = [[None] * n for _ in range(n)]
    symbolic = {}
    for i in range(n):
        for j in range(n):
            r = rho[i, j]
            if i == j:
                values[i][j] = r / M.g[i, i]
            elif r == 0:
                values[i][j] = Fraction(0)
            else:
                if scale is not None:
                    root = scale[i] * scale[j]
                else:
                    root = rational_sqrt(M.g[i, i] * M.g[j, j])
                if root is None:
                    symbolic[(i, j)] = (r, M.g[i, i] * M.g[j, j])
                else:
                    values[i][j] = r / abs(root)
    return FrameRicci(tuple(tuple(r) for r in values), symbolic)


@dataclass(frozen=True)
class EtaEinsteinFit:
    """Best exact candidate for ``Ric = lam g + mu eta (x) eta``."""

    lam: Fraction
    mu: Fraction
    residual_max: Fraction
    exact: bool

    @property
    def einstein(self) -> bool:
        return self.exact and self.mu == 0

    def to_dict(self) -> dict:
        return {
            "lambda": str(self.lam),
            "mu": str(self.mu),
            "residual_max": str(self.residual_max),
            "exact": self.exact,
            "einstein": self.einstein,
        }


def fit_eta_einstein_metric(M: MetricLieAlgebra, eta: Sequence[Fraction], xi: Sequence[Fraction],
                            ric: RicciForm | None = None) -> EtaEinsteinFit:
    """Solve trace and ``(xi, xi)`` equations for ``lam, mu``, then certify by the residual.

    Requires ``eta = g(xi, .)`` with ``g(xi, xi) = 1``.
    """
    n = M.dim
    if n % 2 == 0:
        raise DimensionMismatch("eta-Einstein fitting needs an odd-dimensional algebra")
    rho = (ric or ricci(M)).entries
    tr = contract(M, rho)
    rxx = dot(xi, rho @ tuple(xi))
    lam = (tr - rxx) / (n - 1)
    mu = rxx - lam
    resid = Fraction(0)
    for i in range(n):
        for j in range(n):
            resid = max(resid, abs(rho[i, j] - lam * M.g[i, j] - mu * eta[i] * eta[j]))
    return EtaEinsteinFit(lam, mu, resid, resid == 0)
