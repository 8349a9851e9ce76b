"""Central extensions of Kähler Lie algebras by symplectic forms, and the way back.

Given Kähler data ``(h, J, <,>)`` of dimension ``2n`` and a closed nondegenerate
``omega``, the extension ``g = h + R xi`` has

    [X, Y] = [X, Y]_h - omega(X, Y) xi,   [X, xi] = 0,

with ``phi = J (+) 0``, ``g = <,> (+) 1`` and ``eta = xi^*``, so that
``d eta`` restricts to ``omega``.  The Reeb vector is always the last basis vector.

The closed-form curvature of the extension in terms of ``h`` and ``omega`` is
provided next to a comparer against the direct Koszul computation.  Frame sums
are written as contractions with ``<,>^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import DegenerateOmega, NotMaximalRank, NotTransverselyKahler, OmegaNotClosed, TrivialCenter
from .exact import Matrix, invert, unit_vector
from .forms import KForm, exterior_derivative, is_contact, two_form_rank
from .lie import LieAlgebra, center
from .riemannian import (
    EtaEinsteinFit,
    MetricLieAlgebra,
    RicciForm,
    curvature,
    fit_eta_einstein_metric,
    levi_civita,
    ricci,
)
from .structures import AcmStructure, KahlerStructure, transverse_kahler_defect

__all__ = [
    "SymplecticKahlerData",
    "ExtensionResult",
    "EtaEinsteinFit",
    "central_extend",
    "kahler_quotient",
    "ricci_prop10",
    "Lemma9Prediction",
    "lemma9_rhs",
    "lemma9_defect_report",
    "lemma9_defects",
    "fit_eta_einstein",
    "transverse_ricci",
    "is_null_eta_einstein",
]


class SymplecticKahlerData:
    """A Kähler Lie algebra together with a symplectic form ``w``."""

    __slots__ = ("K", "w")

    def __init__(self, K: KahlerStructure, w: KForm):
        if w.degree != 2 or w.ambient_dim != K.dim:
            raise ValueError("w must be a 2-form on the Kähler algebra")
        if not exterior_derivative(K.L, w).is_zero():
            raise OmegaNotClosed("d omega != 0")
        if two_form_rank(w) != K.dim:
            raise DegenerateOmega(f"omega has rank {two_form_rank(w)} < {K.dim}")
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "w", w)

    def __setattr__(self, name, value):
        raise AttributeError("SymplecticKahlerData is immutable")

    @property
    def dim(self) -> int:
        return self.K.dim

    def __eq__(self, other) -> bool:
        return isinstance(other, SymplecticKahlerData) and self.K == other.K and self.w == other.w

    def __hash__(self) -> int:
        return hash((self.K, self.w))

    def __repr__(self) -> str:
        return f"SymplecticKahlerData({self.K!r}, w={self.w!r})"


@dataclass(frozen=True)
class ExtensionResult:
    """``S`` lives on ``h (+) R xi``; ``inclusion`` maps h-coordinates to g-coordinates."""

    S: AcmStructure
    xi_index: int
    inclusion: Matrix


def central_extend(D: SymplecticKahlerData) -> ExtensionResult:
    m = D.dim
    n1 = m + 1
    Lh = D.K.L
    W = D.w.matrix()
    brackets = {}
    for i, j in combinations(range(m), 2):
        v = tuple(Lh.c(i, j)) + (-W[i, j],)
        if any(v):
            brackets[(i, j)] = v
    L = LieAlgebra(n1, brackets)
    g = Matrix([list(D.K.h.row(i)) + [0] for i in range(m)] + [[0] * m + [1]])
    phi = Matrix([list(D.K.J.row(i)) + [0] for i in range(m)] + [[0] * n1])
    S = AcmStructure(MetricLieAlgebra(L, g), phi, unit_vector(n1, m))
    inclusion = Matrix([[int(i == j) for j in range(m)] for i in range(n1)])
    return ExtensionResult(S, m, inclusion)


def kahler_quotient(S: AcmStructure) -> SymplecticKahlerData:
    """Kähler data on ``g / R xi`` together with ``omega = d eta`` restricted to ``ker eta``.

    Horizontal basis: ``X_i = e_i - eta(e_i) xi`` for every ``i`` except the last
    index ``p`` with ``xi^p != 0``.
    """
    L = S.L
    z = center(L)
    if z.dim == 0:
        raise TrivialCenter("the algebra has trivial center")
    if not z.contains(S.xi):
        raise TrivialCenter("xi is not central")
    if not is_contact(L, S.eta):
        raise NotMaximalRank("eta is not a contact form")
    problem = transverse_kahler_defect(S)
    if problem:
        raise NotTransverselyKahler(problem)
    H = S.horizontal_basis()
    m = len(H)
    B = Matrix.from_columns(H + [S.xi])
    Binv = invert(B)

    def coords(v):
        return (Binv @ tuple(v))[:m]

    brackets = {}
    for a, b in combinations(range(m), 2):
        v = coords(L.bracket(H[a], H[b]))
        if any(v):
            brackets[(a, b)] = v
    Lh = LieAlgebra(m, brackets)
    J = Matrix.from_columns([coords(S.phi @ x) for x in H])
    h = Matrix([[S.M.inner(x, y) for y in H] for x in H])
    deta = S.d_eta()
    w = KForm(m, 2, {(a, b): deta(H[a], H[b]) for a, b in combinations(range(m), 2)})
    return SymplecticKahlerData(KahlerStructure(MetricLieAlgebra(Lh, h), J), w)


def ricci_prop10(D: SymplecticKahlerData) -> RicciForm:
    """Ricci form of the extension assembled from ``h``-data alone.

    horizontal: ``rho_h(Y,Z) + 1/2 sum h^ab w(e_a,Y) w(Z,e_b)``
    mixed:      ``rho(xi,Y) = 1/2 sum h^ab (w(e_a, nabla_b Y) + w(nabla_a e_b, Y))``
    vertical:   ``rho(xi,xi) = 1/4 sum h^ac h^bd w_ab w_cd``
    """
    m = D.dim
    M = D.K.M
    hi = M.g_inv
    W = D.w.matrix()
    conn = levi_civita(M)
    rho_h = ricci(M).entries
    E = [unit_vector(m, i) for i in range(m)]
    out = [[Fraction(0)] * (m + 1) for _ in range(m + 1)]
    for y, z in product(range(m), repeat=2):
        s = Fraction(0)
        for a, b in product(range(m), repeat=2):
            if hi[a, b]:
                s += hi[a, b] * W[a, y] * W[z, b]
        out[y][z] = rho_h[y, z] + s / 2
    for y in range(m):
        s = Fraction(0)
        for a, b in product(range(m), repeat=2):
            if hi[a, b]:
                s += hi[a, b] * (D.w(E[a], conn.nabla(E[b], E[y])) + D.w(conn.nabla(E[a], E[b]), E[y]))
        out[m][y] = out[y][m] = s / 2
    s = Fraction(0)
    for a, b, c, d in product(range(m), repeat=4):
        if hi[a, c] and hi[b, d]:
            s += hi[a, c] * hi[b, d] * W[a, b] * W[c, d]
    out[m][m] = s / 4
    return RicciForm(Matrix(out))


@dataclass
class Lemma9Prediction:
    """Predicted curvature and connection components of the extension (horizontal indices ``< m``).

    ``R_hhhh[(x,y,z,w)] = R(X,Y,Z,W)``, ``R_hhhv[(x,y,z)] = R(X,Y,Z,xi)``,
    ``R_hvvh[(x,z)] = R(X,xi,xi,Z)``; ``nabla[(i,j)]`` is ``nabla_{e_i} e_j``
    on the full extension (``m`` is the xi index).
    """

    m: int
    R_hhhh: dict
    R_hhhv: dict
    R_hvvh: dict
    nabla: dict


def lemma9_rhs(D: SymplecticKahlerData) -> Lemma9Prediction:
    m = D.dim
    M = D.K.M
    hi = M.g_inv
    W = D.w.matrix()
    Lh = D.K.L
    conn = levi_civita(M)
    Rh = curvature(M, conn).R
    E = [unit_vector(m, i) for i in range(m)]
    w = D.w

    R4 = {}
    for x, y, z, t in product(range(m), repeat=4):
        R4[(x, y, z, t)] = Rh[x][y][z][t] + Fraction(1, 4) * (
            2 * W[x, y] * W[z, t] - W[y, z] * W[x, t] + W[x, z] * W[y, t]
        )
    R3 = {}
    for x, y, z in product(range(m), repeat=3):
        R3[(x, y, z)] = -Fraction(1, 2) * (
            w(E[x], conn.nabla(E[y], E[z])) - w(E[y], conn.nabla(E[x], E[z])) - w(Lh.c(x, y), E[z])
        )
    R2 = {}
    for x, z in product(range(m), repeat=2):
        s = Fraction(0)
        for a, b in product(range(m), repeat=2):
            if hi[a, b]:
                s += hi[a, b] * W[x, a] * W[z, b]
        R2[(x, z)] = s / 4

    nab = {}
    for x, y in product(range(m), repeat=2):
        nab[(x, y)] = tuple(conn.gamma[x][y]) + (-W[x, y] / 2,)
    for x in range(m):
        # h(nabla_X xi, Y) = 1/2 w(X, Y)
        v = tuple(sum((hi[a, b] * W[x, b] for b in range(m)), Fraction(0)) / 2 for a in range(m)) + (Fraction(0),)
        nab[(x, m)] = v
        nab[(m, x)] = v
    nab[(m, m)] = (Fraction(0),) * (m + 1)
    return Lemma9Prediction(m, R4, R3, R2, nab)


def lemma9_defect_report(D: SymplecticKahlerData, prediction: Lemma9Prediction | None = None) -> dict[str, Fraction]:
    """Largest absolute difference between the direct and predicted values, per identity."""
    pred = prediction or lemma9_rhs(D)
    S = central_extend(D).S
    conn = levi_civita(S.M)
    R = curvature(S.M, conn).R
    m = pred.m
    report = {
        "cg1.1": max((abs(R[x][y][z][t] - v) for (x, y, z, t), v in pred.R_hhhh.items()), default=Fraction(0)),
        "cg1.2": max((abs(R[x][y][z][m] - v) for (x, y, z), v in pred.R_hhhv.items()), default=Fraction(0)),
        "cg1.3": max((abs(R[x][m][m][z] - v) for (x, z), v in pred.R_hvvh.items()), default=Fraction(0)),
    }
    worst = Fraction(0)
    for (i, j), v in pred.nabla.items():
        worst = max(worst, max(abs(a - b) for a, b in zip(conn.gamma[i][j], v)))
    report["connection"] = worst
    return report


def lemma9_defects(D: SymplecticKahlerData, prediction: Lemma9Prediction | None = None) -> Fraction:
    return max(lemma9_defect_report(D, prediction).values())


def fit_eta_einstein(S: AcmStructure) -> EtaEinsteinFit:
    return fit_eta_einstein_metric(S.M, S.eta.covector(), S.xi)


def transverse_ricci(S: AcmStructure) -> RicciForm:
    return ricci(kahler_quotient(S).K.M)


def is_null_eta_einstein(S: AcmStructure) -> bool:
    """Transversely Ricci flat: the Kähler quotient has vanishing Ricci tensor."""
    return transverse_ricci(S).is_zero()
