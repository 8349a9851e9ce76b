"""Almost contact metric and Kähler structures on Lie algebras.

Endomorphisms are matrices acting on coordinate columns: ``phi e_j = sum_i phi[i, j] e_i``.
Tensor conventions:

* ``Phi(X, Y) = g(X, phi Y)`` and ``Omega(X, Y) = h(X, J Y)``.
* ``N_phi(X, Y) = [phiX, phiY] + phi^2[X, Y] - phi[X, phiY] - phi[phiX, Y] + d eta(X, Y) xi``.
* Lie derivatives along ``xi`` are the algebraic ones, e.g.
  ``(L_xi g)(X, Y) = -g([xi, X], Y) - g(X, [xi, Y])``, so ``L_xi g = 0`` iff ``ad_xi`` is skew.

Predicates are exact tensor equalities; there are no tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (
    Degenerate,
    DimensionMismatch,
    InvalidStructure,
    NotAqs,
    NotSasakian,
    NotTransverselyKahler,
    ZeroLambda,
)
from .exact import Matrix, Number, Vector, dot, imatmul, kernel, lcm_denominator, scalar, unit_vector
from .forms import (
    ComplexTwoForm,
    KForm,
    exterior_derivative,
    interior,
    is_contact,
    lie_derivative_form,
    two_form_rank,
    wedge,
)
from .lie import LieAlgebra, Subspace, ad
from .riemannian import EtaEinsteinFit, MetricLieAlgebra, fit_eta_einstein_metric


def _outer(u: Sequence[Fraction], v: Sequence[Fraction]) -> Matrix:
    return Matrix([[a * b for b in v] for a in u])


def _first_nonzero_vector(table) -> tuple | None:
    for key, vec in table:
        if any(vec):
            return key
    return None


class AcmStructure:
    """An almost contact metric structure ``(phi, xi, eta, g)`` on an odd-dimensional metric Lie algebra.

    ``eta`` may be a 1-form or a covector; when omitted it is ``g(xi, .)``.
    """

    __slots__ = ("M", "phi", "xi", "eta")

    def __init__(self, M: MetricLieAlgebra, phi: Matrix, xi: Sequence[Number],
                 eta: KForm | Sequence[Number] | None = None, check: bool = True):
        n = M.dim
        xi = tuple(scalar(x) for x in xi)
        if eta is None:
            eta = KForm.from_covector(M.lower(xi))
        elif not isinstance(eta, KForm):
            eta = KForm.from_covector([scalar(x) for x in eta])
        if phi.shape != (n, n) or len(xi) != n or eta.ambient_dim != n or eta.degree != 1:
            raise DimensionMismatch("phi, xi and eta must match the algebra dimension")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "eta", eta)
        if check:
            problem = self.axiom_defect()
            if problem:
                raise InvalidStructure(problem)

    def __setattr__(self, name, value):
        raise AttributeError("AcmStructure is immutable")

    @property
    def L(self) -> LieAlgebra:
        return self.M.L

    @property
    def g(self) -> Matrix:
        return self.M.g

    @property
    def dim(self) -> int:
        return self.M.dim

    @property
    def n(self) -> int:
        return (self.dim - 1) // 2

    def axiom_defect(self) -> str | None:
        """Name of the first violated almost contact metric axiom, or None."""
        n = self.dim
        if n % 2 == 0:
            return "dimension must be odd"
        phi, xi, g = self.phi, self.xi, self.g
        eta = self.eta.covector()
        if dot(eta, xi) != 1:
            return "eta(xi) = 1"
        if any(phi @ xi):
            return "phi xi = 0"
        if any(phi.T @ eta):
            return "eta o phi = 0"
        if phi @ phi != -Matrix.identity(n) + _outer(xi, eta):
            return "phi^2 = -I + eta (x) xi"
        if self.M.lower(xi) != eta:
            return "eta = g(xi, .)"
        if phi.T @ g @ phi != g - _outer(eta, eta):
            return "g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)"
        return None

    def d_eta(self) -> KForm:
        return exterior_derivative(self.L, self.eta)

    def horizontal_basis(self) -> list[Vector]:
        """A basis of ``ker eta`` (the ``e_i - eta(e_i) xi`` with the last index carrying xi dropped)."""
        eta = self.eta.covector()
        p = max(i for i, x in enumerate(self.xi) if x)
        out = []
        for i in range(self.dim):
            if i == p:
                continue
            e = unit_vector(self.dim, i)
            out.append(tuple(a - eta[i] * b for a, b in zip(e, self.xi)))
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AcmStructure)
            and self.M == other.M
            and self.phi == other.phi
            and self.xi == other.xi
            and self.eta == other.eta
        )

    def __hash__(self) -> int:
        return hash((self.M, self.phi, self.xi, self.eta))

    def __repr__(self) -> str:
        return f"AcmStructure(dim={self.dim}, xi={[str(x) for x in self.xi]})"


def fundamental_form(S: AcmStructure) -> KForm:
    return KForm.from_matrix(S.g @ S.phi)


def nijenhuis_eval(L: LieAlgebra, phi: Matrix, x: Sequence[Fraction], y: Sequence[Fraction],
                   deta: KForm | None = None, xi: Sequence[Fraction] | None = None) -> Vector:
    """``[phiX, phiY] + phi^2[X,Y] - phi[X, phiY] - phi[phiX, Y]``, plus ``d eta(X,Y) xi`` when given."""
    px, py = phi @ tuple(x), phi @ tuple(y)
    v = L.bracket(px, py)
    v = tuple(a + b for a, b in zip(v, phi @ (phi @ L.bracket(x, y))))
    v = tuple(a - b - c for a, b, c in zip(v, phi @ L.bracket(x, py), phi @ L.bracket(px, y)))
    if deta is not None:
        s = deta(x, y)
        if s:
            v = tuple(a + s * b for a, b in zip(v, xi))
    return v


def nijenhuis(S: AcmStructure) -> tuple:
    """``N[i][j]`` is the coordinate vector of ``N_phi(e_i, e_j)``."""
    n = S.dim
    L = S.L
    P, dp = S.phi._integer_form()
    dc = lcm_denominator(x for i in range(n) for j in range(n) for x in L.c(i, j))
    # C[i][k][j] = dc * c^k_ij, so C[i] is dc * ad(e_i)
    C = [[[int(L.c(i, j)[k] * dc) for j in range(n)] for k in range(n)] for i in range(n)]
    P2 = imatmul(P, P)
    W = S.d_eta().matrix()
    den = dp * dp * dc
    out = []
    for i in range(n):
        A = C[i]
        # dp * dc * ad(phi e_i)
        B = [[sum(P[m][i] * C[m][k][j] for m in range(n)) for j in range(n)] for k in range(n)]
        # phi^2[e_i, e_j] + [phi e_i, phi e_j] - phi[phi e_i, e_j] - phi[e_i, phi e_j], column j
        T = [[w + x - y - z for w, x, y, z in zip(r1, r2, r3, r4)]
             for r1, r2, r3, r4 in zip(imatmul(P2, A), imatmul(B, P), imatmul(P, B), imatmul(imatmul(P, A), P))]
        out.append(tuple(tuple(Fraction(T[k][j], den) + W[i, j] * S.xi[k] for k in range(n)) for j in range(n)))
    return tuple(out)


def lie_derivative_xi(S: AcmStructure, which: str):
    """``L_xi`` of ``phi`` (Matrix), ``g`` (Matrix), ``eta`` (1-form) or ``deta`` (2-form)."""
    A = ad(S.L, S.xi)
    if which == "phi":
        return A @ S.phi - S.phi @ A
    if which == "g":
        return -(A.T @ S.g + S.g @ A)
    if which == "eta":
        return KForm.from_covector(tuple(-x for x in A.T @ S.eta.covector()))
    if which == "deta":
        W = S.d_eta().matrix()
        return KForm.from_matrix(-(A.T @ W + W @ A))
    raise ValueError(f"unknown tensor {which!r}; expected phi, g, eta or deta")


def _alpha(deta: KForm, Phi: KForm) -> Fraction | None:
    """The ``alpha != 0`` with ``d eta = 2 alpha Phi``, if one exists."""
    comps = Phi.components
    if not comps:
        return None
    key = next(iter(comps))
    alpha = deta[key] / (2 * comps[key])
    if alpha == 0 or deta != Phi * (2 * alpha):
        return None
    return alpha


@dataclass(frozen=True)
class ClassificationReport:
    contact: bool
    normal: bool
    k_contact: bool
    cokahler: bool
    sasakian: bool
    alpha_sasakian: bool
    alpha: Fraction | None
    quasi_sasakian: bool
    anti_quasi_sasakian: bool
    transversely_kahler: bool
    eta_einstein: bool
    eta_einstein_lambda: Fraction | None
    eta_einstein_mu: Fraction | None
    double_aqs_member: bool = False
    defects: dict = field(default_factory=dict, compare=False)

    FLAGS = (
        "contact", "normal", "k_contact", "cokahler", "sasakian", "alpha_sasakian",
        "quasi_sasakian", "anti_quasi_sasakian", "transversely_kahler", "double_aqs_member",
        "eta_einstein",
    )

    def implication_violations(self) -> list[str]:
        bad = []
        if self.sasakian and not (self.alpha_sasakian and self.alpha == 1):
            bad.append("sasakian => alpha_sasakian(1)")
        if self.alpha_sasakian and not self.quasi_sasakian:
            bad.append("alpha_sasakian => quasi_sasakian")
        if self.quasi_sasakian and not self.transversely_kahler:
            bad.append("quasi_sasakian => transversely_kahler")
        if self.anti_quasi_sasakian and not self.transversely_kahler:
            bad.append("anti_quasi_sasakian => transversely_kahler")
        if self.cokahler and not self.normal:
            bad.append("cokahler => normal")
        return bad

    def to_dict(self) -> dict:
        out = {name: getattr(self, name) for name in self.FLAGS}
        out["alpha"] = None if self.alpha is None else str(self.alpha)
        out["eta_einstein_lambda"] = None if self.eta_einstein_lambda is None else str(self.eta_einstein_lambda)
        out["eta_einstein_mu"] = None if self.eta_einstein_mu is None else str(self.eta_einstein_mu)
        out["defects"] = dict(sorted(self.defects.items()))
        return dict(sorted(out.items()))


def _label(*idx: int) -> str:
    return "(" + ",".join(f"e{i + 1}" for i in idx) + ")"


def transverse_kahler_defect(S: AcmStructure, dPhi: KForm | None = None, N: tuple | None = None) -> str | None:
    """First failing transversely Kähler condition; ``N`` is a precomputed ``nijenhuis(S)`` table."""
    n = S.dim
    dPhi = dPhi if dPhi is not None else exterior_derivative(S.L, fundamental_form(S))
    if not dPhi.is_zero():
        return "dPhi " + _label(*next(iter(dPhi.components)))
    if N is None:
        deta = S.d_eta()

        def evaluate(x, y):
            return nijenhuis_eval(S.L, S.phi, x, y, deta, S.xi)
    else:
        def evaluate(x, y):
            out = [Fraction(0)] * n
            for i, xi in enumerate(x):
                for j, yj in enumerate(y):
                    if xi and yj:
                        f = xi * yj
                        out = [o + f * v for o, v in zip(out, N[i][j])]
            return tuple(out)

    for i in range(n):
        if any(evaluate(S.xi, unit_vector(n, i))):
            return f"N(xi,e{i + 1})"
    H = S.horizontal_basis()
    for a, b in combinations(range(len(H)), 2):
        v = evaluate(H[a], H[b])
        for c, z in enumerate(H):
            if S.M.inner(v, z):
                return f"g(N(X{a + 1},X{b + 1}),X{c + 1})"
    return None


def classify(S: AcmStructure) -> ClassificationReport:
    n = S.dim
    L = S.L
    deta = S.d_eta()
    Phi = fundamental_form(S)
    dPhi = exterior_derivative(L, Phi)
    N = nijenhuis(S)
    defects: dict[str, str] = {}

    contact = is_contact(L, S.eta)
    pairs = [((i, j), N[i][j]) for i, j in combinations(range(n), 2)]
    bad = _first_nonzero_vector(pairs)
    normal = bad is None
    if bad is not None:
        defects["normal"] = "N" + _label(*bad)

    deta_zero = deta.is_zero()
    dPhi_zero = dPhi.is_zero()
    if not dPhi_zero:
        defects["dPhi"] = "dPhi" + _label(*next(iter(dPhi.components)))
    cokahler = normal and deta_zero and dPhi_zero

    alpha = _alpha(deta, Phi) if normal else None
    alpha_sasakian = alpha is not None
    sasakian = alpha == 1
    quasi = normal and dPhi_zero

    W = deta.matrix()
    aqs_N = True
    for i, j in combinations(range(n), 2):
        target = tuple(2 * W[i, j] * x for x in S.xi)
        if N[i][j] != target:
            aqs_N = False
            defects.setdefault("anti_quasi_sasakian", "N - 2 deta (x) xi" + _label(i, j))
            break
    aqs = dPhi_zero and aqs_N

    Lphi = lie_derivative_xi(S, "phi")
    k_contact = deta == Phi * 2 and Lphi.is_zero()

    tk_problem = transverse_kahler_defect(S, dPhi, N)
    if tk_problem:
        defects["transversely_kahler"] = tk_problem

    fit = fit_eta_einstein_metric(S.M, S.eta.covector(), S.xi)
    return ClassificationReport(
        contact=contact,
        normal=normal,
        k_contact=k_contact,
        cokahler=cokahler,
        sasakian=sasakian,
        alpha_sasakian=alpha_sasakian,
        alpha=alpha,
        quasi_sasakian=quasi,
        anti_quasi_sasakian=aqs,
        transversely_kahler=tk_problem is None,
        eta_einstein=fit.exact,
        eta_einstein_lambda=fit.lam if fit.exact else None,
        eta_einstein_mu=fit.mu if fit.exact else None,
        defects=defects,
    )


def fit_structure(S: AcmStructure) -> EtaEinsteinFit:
    return fit_eta_einstein_metric(S.M, S.eta.covector(), S.xi)


@dataclass(frozen=True)
class AqsOperators:
    psi: Matrix
    A: Matrix
    lambda_sq: Fraction | None


def aqs_operators(S: AcmStructure) -> AqsOperators:
    """``2 g(X, psi Y) = d eta(X, Y)`` and ``A = phi psi``.

    ``lambda_sq`` is the constant with ``psi^2 = A^2 = lambda_sq (-I + eta (x) xi)``
    when such a constant exists (always in dimension 5).
    """
    rep = classify(S)
    if not rep.anti_quasi_sasakian or S.d_eta().is_zero():
        raise NotAqs("the structure is not anti-quasi-Sasakian with d eta != 0")
    W = S.d_eta().matrix()
    psi = (S.M.g_inv @ W) * Fraction(1, 2)
    A = S.phi @ psi
    base = -Matrix.identity(S.dim) + _outer(S.xi, S.eta.covector())
    lam_sq = -(psi @ psi).trace() / (2 * S.n)
    if psi @ psi != base * lam_sq or A @ A != base * lam_sq:
        lam_sq = None
    return AqsOperators(psi, A, lam_sq)


def homothetic_deform(S: AcmStructure, lam: Number, rescale_basis: bool = False) -> AcmStructure:
    """``(phi, xi/lam, lam eta, lam^2 g)``.

    With ``rescale_basis`` the result is re-expressed in the basis ``e_i / lam``:
    the components of ``phi, xi, eta, g`` are unchanged and the structure
    constants are divided by ``lam``.
    """
    lam = scalar(lam)
    if lam == 0:
        raise ZeroLambda("the homothety factor must be nonzero")
    if rescale_basis:
        n = S.dim
        L = LieAlgebra(n, {k: tuple(x / lam for x in v) for k, v in S.L.nonzero_brackets().items()}, check=False)
        return AcmStructure(MetricLieAlgebra(L, S.g), S.phi, S.xi, S.eta)
    M = MetricLieAlgebra(S.L, S.g * (lam * lam))
    return AcmStructure(M, S.phi, tuple(x / lam for x in S.xi), S.eta * lam)


def decompose_ad_xi(S: AcmStructure) -> tuple[Subspace, Subspace]:
    if not classify(S).transversely_kahler:
        raise NotTransverselyKahler("ker/Im ad_xi splitting needs a transversely Kähler structure")
    A = ad(S.L, S.xi)
    ker = Subspace.span(kernel(A), S.dim)
    image = Subspace.span(A.columns(), S.dim)
    return ker, image


def check_contact_calabi_yau(S: AcmStructure, eps: ComplexTwoForm) -> bool:
    if S.dim != 5:
        raise DimensionMismatch("contact Calabi-Yau structures are checked in dimension 5")
    if not classify(S).sasakian:
        raise NotSasakian("a contact Calabi-Yau structure needs a Sasakian structure")
    parts = (eps.real_part, eps.imag_part)
    if all(p.is_zero() for p in parts):
        return False
    for p in parts:
        if not exterior_derivative(S.L, p).is_zero():
            return False
        if not interior(S.xi, p).is_zero():
            return False
        if not lie_derivative_form(S.L, S.xi, p).is_zero():
            return False
    deta = S.d_eta()
    return eps.wedge_conjugate() == wedge(deta, deta) * Fraction(1, 2)


class KahlerStructure:
    """A metric Lie algebra of even dimension with a complex structure ``J``; ``Omega = h(., J .)``."""

    __slots__ = ("M", "J")

    def __init__(self, M: MetricLieAlgebra, J: Matrix, check: bool = True):
        if M.dim % 2 or J.shape != (M.dim, M.dim):
            raise DimensionMismatch("Kähler data needs even dimension and a square J")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "J", J)
        if check:
            rep = validate_kahler(self)
            if not rep.ok:
                raise InvalidStructure(rep.defect)

    def __setattr__(self, name, value):
        raise AttributeError("KahlerStructure is immutable")

    @classmethod
    def from_kahler_form(cls, L: LieAlgebra, J: Matrix, omega: KForm, check: bool = True) -> "KahlerStructure":
        """Recover ``h(X, Y) = Omega(JX, Y)`` from the Kähler form."""
        h = J.T @ omega.matrix()
        if not h.is_symmetric():
            raise InvalidStructure("Omega(J., .) is not symmetric")
        return cls(MetricLieAlgebra(L, h), J, check=check)

    @property
    def L(self) -> LieAlgebra:
        return self.M.L

    @property
    def h(self) -> Matrix:
        return self.M.g

    @property
    def dim(self) -> int:
        return self.M.dim

    def kahler_form(self) -> KForm:
        return KForm.from_matrix(self.h @ self.J)

    def __eq__(self, other) -> bool:
        return isinstance(other, KahlerStructure) and self.M == other.M and self.J == other.J

    def __hash__(self) -> int:
        return hash((self.M, self.J))

    def __repr__(self) -> str:
        return f"KahlerStructure(dim={self.dim}, J={self.J.to_strings()})"


@dataclass(frozen=True)
class KahlerReport:
    ok: bool
    defect: str | None = None


def validate_kahler(K: KahlerStructure) -> KahlerReport:
    n = K.dim
    J, h, L = K.J, K.h, K.L
    if J @ J != -Matrix.identity(n):
        return KahlerReport(False, "J squared")
    E = [unit_vector(n, i) for i in range(n)]
    for i, j in combinations(range(n), 2):
        v = nijenhuis_eval(L, J, E[i], E[j])
        # nijenhuis_eval uses phi^2[X,Y]; with J^2 = -I that is -[X,Y]
        if any(v):
            return KahlerReport(False, f"N_J(e{i + 1},e{j + 1})")
    if J.T @ h @ J != h:
        return KahlerReport(False, "h(JX,JY) = h(X,Y)")
    dOmega = exterior_derivative(L, K.kahler_form())
    if not dOmega.is_zero():
        return KahlerReport(False, "dOmega" + _label(*next(iter(dOmega.components))))
    return KahlerReport(True, None)


def omega_invariance_type(K: KahlerStructure, w: KForm) -> str:
    """``J_invariant``, ``J_anti_invariant`` or ``mixed`` for a nondegenerate 2-form."""
    if two_form_rank(w) < K.dim:
        raise Degenerate("omega must be nondegenerate")
    W = w.matrix()
    WJ = K.J.T @ W @ K.J
    if WJ == W:
        return "J_invariant"
    if WJ == -W:
        return "J_anti_invariant"
    return "mixed"


@dataclass(frozen=True)
class DoubleAqsReport:
    ok: bool
    quaternionic: bool
    reports: tuple
    defect: str | None = None


def verify_double_aqs(M: MetricLieAlgebra, phis: Sequence[Matrix], xi: Sequence[Number]) -> DoubleAqsReport:
    """Check a triple with ``phi_i phi_j = phi_k = -phi_j phi_i``, the first two aqS and the third Sasakian.

    On success every returned report has ``double_aqs_member`` set.
    """
    if len(phis) != 3:
        raise ValueError("exactly three endomorphisms are required")
    structures = [AcmStructure(M, p, xi) for p in phis]
    reports = [classify(s) for s in structures]
    p1, p2, p3 = phis
    quaternionic = True
    defect = None
    for a, b, c, name in ((p1, p2, p3, "phi1 phi2"), (p2, p3, p1, "phi2 phi3"), (p3, p1, p2, "phi3 phi1")):
        if a @ b != c or b @ a != -c:
            quaternionic = False
            defect = defect or name
    if not (reports[0].anti_quasi_sasakian and reports[1].anti_quasi_sasakian):
        defect = defect or "phi1, phi2 anti-quasi-Sasakian"
    if not reports[2].sasakian:
        defect = defect or "phi3 Sasakian"
    ok = defect is None
    if ok:
        reports = [replace(r, double_aqs_member=True) for r in reports]
    return DoubleAqsReport(ok, quaternionic, tuple(reports), defect)
