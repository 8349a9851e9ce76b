"""Named fixtures: Lie algebras, Kähler and almost contact metric structures.

Every fixture has a parameter schema, documented rational samples that satisfy
its side conditions, and optional expected fragments (Ricci values, fitted
eta-Einstein constants, classification flags) that the library must reproduce.

    >>> S = instantiate("eta_g3", {"a": 1, "b": 1, "lam": 2, "sign": 1})
    >>> S.dim
    5
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .errors import ParamConstraintViolation
from .exact import Matrix, Number, scalar, unit_vector
from .extension import SymplecticKahlerData, central_extend
from .forms import KForm, exterior_derivative
from .lie import LieAlgebra, parse_structure_equations
from .riemannian import MetricLieAlgebra
from .structures import AcmStructure, KahlerStructure

F = Fraction


# construction helpers


def complex_structure(n: int, pairs) -> Matrix:
    """``pairs`` of 1-based ``(a, b)`` meaning ``J e_a = e_b`` and ``J e_b = -e_a``."""
    rows = [[F(0)] * n for _ in range(n)]
    for a, b in pairs:
        rows[b - 1][a - 1] = F(1)
        rows[a - 1][b - 1] = F(-1)
    return Matrix(rows)


def _labels(dim: int, comps: Mapping[str, Number]) -> KForm:
    comps = {k: v for k, v in comps.items() if scalar(v) != 0}
    return KForm.from_labels(dim, comps) if comps else KForm.zero(dim, 2)


def kahler(structure: str, pairs, omega: Mapping[str, Number], check: bool = True) -> KahlerStructure:
    L = parse_structure_equations(structure)
    J = complex_structure(L.dim, pairs)
    return KahlerStructure.from_kahler_form(L, J, _labels(L.dim, omega), check=check)


def extend(K: KahlerStructure, omega: Mapping[str, Number]) -> AcmStructure:
    return central_extend(SymplecticKahlerData(K, _labels(K.dim, omega))).S


def sasakian_from_equations(structure: str, pairs) -> AcmStructure:
    """Sasakian candidate on ``(..., d e^n)`` with ``xi = e_n``: ``g = 1/2 d eta(phi ., .) + eta (x) eta``."""
    L = parse_structure_equations(structure)
    n = L.dim
    phi = complex_structure(n, pairs)
    eta = KForm.basis(n, str(n))
    W = exterior_derivative(L, eta).matrix()
    g = phi.T @ W * F(1, 2)
    g = Matrix([[g[i, j] + (1 if i == j == n - 1 else 0) for j in range(n)] for i in range(n)])
    return AcmStructure(MetricLieAlgebra(L, g), phi, unit_vector(n, n - 1))


def _fmt(v: Fraction) -> str:
    return str(v)


# parameter checking


def _need(cond: bool, text: str) -> None:
    if not cond:
        raise ParamConstraintViolation(f"parameter constraint violated: {text}")


def pfaffian(w: KForm) -> Fraction:
    return w[(0, 1)] * w[(2, 3)] - w[(0, 2)] * w[(1, 3)] + w[(0, 3)] * w[(1, 2)]


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str  # lie | kahler | symplectic | acm
    description: str
    params: tuple
    samples: tuple
    build: Callable = field(repr=False)
    expected: Callable | None = field(default=None, repr=False)
    tags: frozenset = frozenset()

    def resolve(self, params: Mapping[str, Number] | None = None) -> dict[str, Fraction]:
        values = dict(self.samples[0]) if self.samples else {}
        for key, val in (params or {}).items():
            if key not in self.params:
                raise ParamConstraintViolation(f"unknown parameter {key!r} for {self.name}; expected {list(self.params)}")
            try:
                values[key] = scalar(val)
            except (TypeError, ValueError) as exc:
                raise ParamConstraintViolation(f"parameter {key}={val!r} is not a rational number") from exc
        return {k: scalar(v) for k, v in values.items()}

    def instantiate(self, params: Mapping[str, Number] | None = None):
        return self.build(self.resolve(params))

    def expected_for(self, params: Mapping[str, Number] | None = None) -> dict:
        if self.expected is None:
            return {}
        return self.expected(self.resolve(params))


_REGISTRY: dict[str, Fixture] = {}


def _register(name, kind, description, params, samples, build, expected=None, tags=()):
    samples = tuple({k: scalar(v) for k, v in s.items()} for s in samples)
    _REGISTRY[name] = Fixture(name, kind, description, tuple(params), samples, build, expected, frozenset(tags))


# basic fixtures


def _abelian(p):
    n = p["n"]
    _need(n.denominator == 1 and 1 <= n <= 6, "n is an integer with 1 <= n <= 6")
    return LieAlgebra.abelian(int(n))


_register("abelian", "lie", "abelian Lie algebra R^n", ["n"], [{"n": 5}, {"n": 4}], _abelian)


def _r4_kahler(p):
    a, b = p["a"], p["b"]
    _need(a > 0 and b > 0, "a, b > 0")
    return kahler("(0,0,0,0)", [(1, 2), (3, 4)], {"12": -a, "34": -b})


_register("r4_kahler", "kahler", "flat R^4, J e1 = e2, J e3 = e4, Omega = -(a e12 + b e34)",
          ["a", "b"], [{"a": 1, "b": 1}, {"a": 2, "b": 3}], _r4_kahler,
          lambda p: {"frame_ricci_diag": [F(0)] * 4, "flat": True}, ["kahler"])


def _r5_cokahler(p):
    L = LieAlgebra.abelian(5)
    phi = complex_structure(5, [(1, 2), (3, 4)])
    return AcmStructure(MetricLieAlgebra(L, Matrix.identity(5)), phi, unit_vector(5, 4))


_register("r5_cokahler", "acm", "abelian R^5 with its flat cokähler structure", [], [{}], _r5_cokahler,
          lambda p: {"cokahler": True, "normal": True, "contact": False})


def h5_double_aqs_triple(c: Number = 1):
    """``(M, (phi1, phi2, phi3), xi)`` on h5 with ``[e1,e4] = [e2,e3] = 2c xi``."""
    c = scalar(c)
    _need(c != 0, "c != 0")
    L = LieAlgebra.from_brackets(5, {(1, 4): {5: 2 * c}, (2, 3): {5: 2 * c}})
    M = MetricLieAlgebra(L, Matrix.identity(5))
    phis = (
        complex_structure(5, [(1, 2), (3, 4)]),
        complex_structure(5, [(1, 3), (4, 2)]),
        complex_structure(5, [(1, 4), (2, 3)]),
    )
    return M, phis, unit_vector(5, 4)


def _h5(p):
    i = p["i"]
    _need(i in (1, 2, 3), "i in {1, 2, 3}")
    M, phis, xi = h5_double_aqs_triple(p["c"])
    return AcmStructure(M, phis[int(i) - 1], xi)


def _h5_expected(p):
    if p["i"] == 3:
        return {"sasakian": p["c"] == 1, "alpha_sasakian": True, "alpha": p["c"],
                "fundamental_form": {"14": F(-1), "23": F(-1)}}
    return {"anti_quasi_sasakian": True, "quasi_sasakian": False, "aqs_lambda_sq": p["c"] ** 2}


_register("h5_double_aqs", "acm",
          "h5 with [e1,e4] = [e2,e3] = 2c xi and the structures phi_1, phi_2 (aqS), phi_3 (Sasakian for c = 1)",
          ["i", "c"], [{"i": 3, "c": 1}, {"i": 1, "c": 1}, {"i": 2, "c": 1}, {"i": 1, "c": 3}],
          _h5, _h5_expected, ["sasakian"])


# Sasakian Lie algebras with nontrivial center

_SASAKI = {
    "sasaki_g1": ("(0,0,0,0,e^{12}+e^{34})", [(2, 1), (4, 3)]),
    "sasaki_g2": ("(0,-e^{12},0,0,e^{12}+e^{34})", [(2, 1), (4, 3)]),
    "sasaki_g3": ("(0,-e^{13},e^{12},0,e^{14}+e^{23})", [(4, 1), (3, 2)]),
    "sasaki_g4": ("(0,-e^{12},0,-e^{34},e^{12}+e^{34})", [(2, 1), (4, 3)]),
    "sasaki_g5": ("(1/2e^{14},1/2e^{24},-e^{12}+e^{34},0,e^{12}-e^{34})", [(2, 1), (3, 4)]),
}

for _name, (_eqs, _pairs) in _SASAKI.items():
    _register(_name, "acm", f"Sasakian structure on {_eqs}", [], [{}],
              (lambda eqs, pairs: lambda p: sasakian_from_equations(eqs, pairs))(_eqs, _pairs),
              lambda p: {"sasakian": True}, ["sasakian"])


D42 = "(2e^{14},-e^{24},-e^{12}+e^{34},0)"
D42_KAHLER_J = Matrix([[0, 0, 0, 2], [F(-1, 2), 0, 1, 0], [0, -1, 0, 1], [F(-1, 2), 0, 0, 0]])
D42_KAHLER_OMEGA = {"12": 1, "34": -1, "14": 2, "23": 1}


def d42_kahler(t: Number = 1) -> KahlerStructure:
    """An integrable Kähler structure on d_{4,2}, scaled by ``t > 0``.

    ``J e1 = -(e2 + e4)/2``, ``J e2 = -e3``, ``J e3 = e2``, ``J e4 = 2 e1 + e3``,
    ``Omega = t(e12 - e34 + 2 e14 + e23)``.
    """
    t = scalar(t)
    _need(t > 0, "t > 0")
    L = parse_structure_equations(D42)
    return KahlerStructure.from_kahler_form(L, D42_KAHLER_J, _labels(4, {k: t * v for k, v in D42_KAHLER_OMEGA.items()}))


_register("d4_2_kahler", "kahler", "d_{4,2} with an integrable compatible Kähler structure (non-diagonal metric)",
          ["t"], [{"t": 1}, {"t": 3}], lambda p: d42_kahler(p["t"]), None, ["kahler"])


def _g6(p):
    K = d42_kahler(1)
    return extend(K, {k: 2 * v for k, v in D42_KAHLER_OMEGA.items()})


_register("sasaki_g6", "acm", "Sasakian structure on R x| n_4: central extension of d_{4,2} by 2 Omega",
          [], [{}], _g6, lambda p: {"sasakian": True}, ["sasakian"])

_register("g6_printed", "lie", "the table entry (2e14,-e24,-e12+e34,0,e23); its e^5 is not a contact form",
          [], [{}], lambda p: parse_structure_equations("(2e^{14},-e^{24},-e^{12}+e^{34},0,e^{23})"),
          lambda p: {"contact": False})


def _g7(p):
    d = p["delta"]
    _need(d > 0, "delta > 0")
    eqs = f"({d / 2}e^{{14}}+e^{{24}},-e^{{14}}+{d / 2}e^{{24}},-e^{{12}}+{d}e^{{34}},0,e^{{12}}-{d}e^{{34}})"
    return sasakian_from_equations(eqs, [(2, 1), (3, 4)])


def _g8(p):
    d = p["delta"]
    _need(d > 0, "delta > 0")
    eqs = f"(e^{{14}},{d}e^{{34}},-{d}e^{{24}},0,e^{{14}}+e^{{23}})"
    return sasakian_from_equations(eqs, [(4, 1), (3, 2)])


_register("sasaki_g7", "acm", "Sasakian structure on g_7^delta", ["delta"], [{"delta": 1}, {"delta": 2}],
          _g7, lambda p: {"sasakian": True}, ["sasakian"])
_register("sasaki_g8", "acm", "Sasakian structure on g_8^delta", ["delta"], [{"delta": 1}, {"delta": F(1, 2)}],
          _g8, lambda p: {"sasakian": True}, ["sasakian"])


# Lie algebras with trivial center

_register("g0", "lie", "R^2 x| h_3 with trivial center", [], [{}],
          lambda p: LieAlgebra.from_brackets(5, {
              (1, 3): {3: 1}, (1, 4): {4: F(1, 2)}, (1, 5): {5: F(1, 2)},
              (2, 4): {5: 1}, (2, 5): {4: -1}, (4, 5): {3: -1}}),
          lambda p: {"center_dim": 0, "unimodular": False}, ["sasakian"])

_register("sl2_x_aff", "lie", "sl(2,R) x aff(R)", [], [{}],
          lambda p: LieAlgebra.from_brackets(5, {
              (1, 2): {2: 1}, (3, 4): {4: 2}, (3, 5): {5: -2}, (4, 5): {3: 1}}),
          lambda p: {"center_dim": 0, "derived_dim": 4}, ["sasakian"])

_register("su2_x_aff", "lie", "su(2) x aff(R)", [], [{}],
          lambda p: LieAlgebra.from_brackets(5, {
              (1, 2): {2: 1}, (3, 4): {5: 1}, (4, 5): {3: 1}, (5, 3): {4: 1}}),
          lambda p: {"center_dim": 0, "derived_dim": 4}, ["sasakian"])

_register("sl2_semidirect_r2", "lie", "sl(2,R) x| R^2 (standard representation); carries no Sasakian structure",
          [], [{}],
          lambda p: LieAlgebra.from_brackets(5, {
              (1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1},
              (1, 4): {4: 1}, (1, 5): {5: -1}, (2, 5): {4: 1}, (3, 4): {5: 1}}),
          lambda p: {"center_dim": 0, "derived_dim": 5})


# Four-dimensional Kähler Lie algebras


@dataclass(frozen=True)
class KahlerRow:
    structure: str
    pairs: tuple
    omega: Callable  # params -> Kähler form labels
    conditions: Callable  # params -> None (raises)
    ricci_diag: Callable  # params -> orthonormal-frame Ricci diagonal
    params: tuple
    samples: tuple
    integrable: bool = True


def _pos(*names):
    def check(p):
        for n in names:
            _need(p[n] > 0, f"{n} > 0")
    return check


def _r4_conditions(b_sign):
    def check(p):
        _need(p["a"] < 0, "a < 0")
        _need(p["b"] * b_sign > 0, "b > 0" if b_sign > 0 else "b < 0")
        _need(p["delta"] != 0, "delta != 0")
    return check


def _dp_conditions(a_sign):
    def check(p):
        _need(p["a"] * a_sign > 0, "a > 0" if a_sign > 0 else "a < 0")
        _need(p["delta"] > 0, "delta > 0")
    return check


def _d_prime(p):
    d = p["delta"]
    return f"({d / 2}e^{{14}}+e^{{24}},-e^{{14}}+{d / 2}e^{{24}},-e^{{12}}+{d}e^{{34}},0)"


def _r4_prime(p):
    d = p["delta"]
    return f"(e^{{14}},{d}e^{{34}},-{d}e^{{24}},0)"


TABLE1: dict[str, KahlerRow] = {
    "rr30": KahlerRow("(0,-e^{12},0,0)", ((1, 2), (3, 4)),
                      lambda p: {"12": -p["a"], "34": -p["b"]}, _pos("a", "b"),
                      lambda p: [-1 / p["a"], -1 / p["a"], F(0), F(0)],
                      ("a", "b"), ({"a": 1, "b": 1}, {"a": 4, "b": 9}, {"a": F(2, 3), "b": 5})),
    "rr30_prime": KahlerRow("(0,-e^{13},e^{12},0)", ((1, 4), (2, 3)),
                            lambda p: {"14": -p["a"], "23": -p["b"]}, _pos("a", "b"),
                            lambda p: [F(0)] * 4,
                            ("a", "b"), ({"a": 1, "b": 1}, {"a": 2, "b": 3}, {"a": F(1, 2), "b": 7})),
    "r2r2": KahlerRow("(0,-e^{12},0,-e^{34})", ((1, 2), (3, 4)),
                      lambda p: {"12": -p["a"], "34": -p["b"]}, _pos("a", "b"),
                      lambda p: [-1 / p["a"], -1 / p["a"], -1 / p["b"], -1 / p["b"]],
                      ("a", "b"), ({"a": 1, "b": 1}, {"a": 2, "b": 5})),
    "r4_0_delta_J1": KahlerRow(None, ((4, 1), (2, 3)),
                               lambda p: {"14": -p["a"], "23": -p["b"]}, _r4_conditions(1),
                               lambda p: [1 / p["a"], F(0), F(0), 1 / p["a"]],
                               ("a", "b", "delta"), ({"a": -1, "b": 1, "delta": 1}, {"a": -3, "b": 2, "delta": F(1, 2)})),
    "r4_0_delta_J2": KahlerRow(None, ((4, 1), (3, 2)),
                               lambda p: {"14": -p["a"], "23": -p["b"]}, _r4_conditions(-1),
                               lambda p: [1 / p["a"], F(0), F(0), 1 / p["a"]],
                               ("a", "b", "delta"), ({"a": -1, "b": -1, "delta": 1}, {"a": -2, "b": -5, "delta": 3})),
    "d4_2": KahlerRow(D42, ((1, 4), (2, 3)),
                      lambda p: {"14": -p["a"], "23": -p["b"]}, _pos("a", "b"),
                      lambda p: [F(-9, 2) / p["a"], F(3, 2) / p["a"], F(-3, 2) / p["a"], -6 / p["a"]],
                      ("a", "b"), ({"a": 1, "b": 1}, {"a": 4, "b": 9}, {"a": 2, "b": F(1, 3)}), integrable=False),
    "d4_half": KahlerRow("(1/2e^{14},1/2e^{24},-e^{12}+e^{34},0)", ((1, 2), (4, 3)),
                         lambda p: {"12": -p["a"], "34": p["a"]}, _pos("a"),
                         lambda p: [F(-3, 2) / p["a"]] * 4,
                         ("a",), ({"a": 1}, {"a": 3}, {"a": F(1, 4)})),
    "d4_delta_J1": KahlerRow(None, ((1, 2), (4, 3)),
                             lambda p: {"12": -p["a"], "34": p["a"] * p["delta"]}, _dp_conditions(1),
                             lambda p: [-3 * p["delta"] / (2 * p["a"])] * 4,
                             ("a", "delta"), ({"a": 1, "delta": 1}, {"a": 2, "delta": 3}, {"a": F(1, 2), "delta": F(1, 4)})),
    "d4_delta_J3": KahlerRow(None, ((2, 1), (3, 4)),
                             lambda p: {"12": -p["a"], "34": p["a"] * p["delta"]}, _dp_conditions(-1),
                             lambda p: [3 * p["delta"] / (2 * p["a"])] * 4,
                             ("a", "delta"), ({"a": -1, "delta": 1}, {"a": -2, "delta": 3})),
}

_ROW_STRUCTURE = {"r4_0_delta_J1": _r4_prime, "r4_0_delta_J2": _r4_prime,
                  "d4_delta_J1": _d_prime, "d4_delta_J3": _d_prime}


def table1_structure(row: str, p: Mapping[str, Fraction]) -> str:
    r = TABLE1[row]
    return _ROW_STRUCTURE[row](p) if r.structure is None else r.structure


def table1_kahler(row: str, p: Mapping[str, Fraction]) -> KahlerStructure:
    """Kähler data of a row.  The d_{4,2} row keeps its tabulated J, which is not integrable."""
    r = TABLE1[row]
    r.conditions(p)
    return kahler(table1_structure(row, p), r.pairs, r.omega(p), check=r.integrable)


for _row, _r in TABLE1.items():
    _register(f"table1_{_row}", "kahler",
              f"four-dimensional Kähler row {_row}" + ("" if _r.integrable else " (tabulated J is not integrable)"),
              _r.params, _r.samples,
              (lambda row: lambda p: table1_kahler(row, p))(_row),
              (lambda r: lambda p: {"frame_ricci_diag": r.ricci_diag(p), "integrable": r.integrable})(_r),
              ["kahler", "table1"])


# symplectic forms

TABLE2_TERMS: dict[str, dict[str, dict[str, Fraction]]] = {
    "rr30": {"a12": {"12": F(1)}, "a13": {"13": F(1)}, "a14": {"14": F(1)}, "a34": {"34": F(1)}},
    "rr30_prime": {"a12": {"12": F(1)}, "a13": {"13": F(1)}, "a14": {"14": F(1)}, "a23": {"23": F(1)}},
    "r2r2": {"a12": {"12": F(1)}, "a13": {"13": F(1)}, "a34": {"34": F(1)}},
    "r4_0_delta_J1": {"a14": {"14": F(1)}, "a23": {"23": F(1)}, "a24": {"24": F(1)}, "a34": {"34": F(1)}},
    "r4_0_delta_J2": {"a14": {"14": F(1)}, "a23": {"23": F(1)}, "a24": {"24": F(1)}, "a34": {"34": F(1)}},
    "d4_2": {"a12_34": {"12": F(1), "34": F(-1)}, "a14": {"14": F(1)}, "a23": {"23": F(1)}, "a24": {"24": F(1)}},
    "d4_half": {"a12_34": {"12": F(1), "34": F(-1)}, "a14": {"14": F(1)}, "a24": {"24": F(1)}},
    "d4_delta_J1": {"a12_d34": {"12": F(1), "34": None}, "a14": {"14": F(1)}, "a24": {"24": F(1)}},
    "d4_delta_J3": {"a12_d34": {"12": F(1), "34": None}, "a14": {"14": F(1)}, "a24": {"24": F(1)}},
    "r4": {k: {k[1:]: F(1)} for k in ("a12", "a13", "a14", "a23", "a24", "a34")},
}

TABLE2_SAMPLES: dict[str, tuple] = {
    "rr30": ({"a12": 1, "a13": 0, "a14": 0, "a34": 1}, {"a12": 2, "a13": 1, "a14": -1, "a34": 3},
             {"a12": -1, "a13": 2, "a14": 1, "a34": F(1, 2)}),
    "rr30_prime": ({"a12": 0, "a13": 0, "a14": 1, "a23": 1}, {"a12": 1, "a13": -2, "a14": 3, "a23": -1},
                   {"a12": F(1, 2), "a13": 1, "a14": -1, "a23": 2}),
    "r2r2": ({"a12": 1, "a13": 0, "a34": 1}, {"a12": 3, "a13": 2, "a34": -1}, {"a12": -1, "a13": F(1, 3), "a34": 2}),
    "r4_0_delta_J1": ({"a14": 1, "a23": 1, "a24": 0, "a34": 0}, {"a14": 2, "a23": -1, "a24": 1, "a34": 3}),
    "r4_0_delta_J2": ({"a14": 1, "a23": -1, "a24": 0, "a34": 0}, {"a14": -2, "a23": 3, "a24": 1, "a34": -1}),
    "d4_2": ({"a12_34": 0, "a14": 1, "a23": 1, "a24": 0}, {"a12_34": 1, "a14": 2, "a23": 3, "a24": 1},
             {"a12_34": 2, "a14": -1, "a23": 1, "a24": -2}),
    "d4_half": ({"a12_34": 1, "a14": 0, "a24": 0}, {"a12_34": 2, "a14": 1, "a24": 3}, {"a12_34": -1, "a14": 2, "a24": -1}),
    "d4_delta_J1": ({"a12_d34": 1, "a14": 0, "a24": 0}, {"a12_d34": 2, "a14": 1, "a24": -1}),
    "d4_delta_J3": ({"a12_d34": 1, "a14": 0, "a24": 0}, {"a12_d34": -3, "a14": 2, "a24": 1}),
    "r4": ({"a12": 1, "a13": 0, "a14": 0, "a23": 0, "a24": 0, "a34": 1},
           {"a12": 1, "a13": 2, "a14": -1, "a23": 3, "a24": 1, "a34": 2}),
}


def table2_form(row: str, p: Mapping[str, Fraction]) -> KForm:
    comps: dict[str, Fraction] = {}
    for coeff, terms in TABLE2_TERMS[row].items():
        for lab, c in terms.items():
            c = -p["delta"] if c is None else c
            comps[lab] = comps.get(lab, F(0)) + p[coeff] * c
    w = _labels(4, comps)
    _need(pfaffian(w) != 0, "omega nondegenerate (omega ^ omega != 0)")
    return w


def table2_data(row: str, p: Mapping[str, Fraction]) -> SymplecticKahlerData:
    K = _r4_kahler(p) if row == "r4" else table1_kahler(row, p)
    return SymplecticKahlerData(K, table2_form(row, p))


for _row, _terms in TABLE2_TERMS.items():
    _base = ("a", "b") if _row == "r4" else TABLE1[_row].params
    _base_sample = {"a": 1, "b": 1} if _row == "r4" else dict(TABLE1[_row].samples[0])
    _base_alt = {"a": 2, "b": 3} if _row == "r4" else dict(TABLE1[_row].samples[1])
    _samples = [dict(_base_sample, **s) for s in TABLE2_SAMPLES[_row]]
    _samples.append(dict(_base_alt, **TABLE2_SAMPLES[_row][-1]))
    _register(f"table2_{_row}", "symplectic", f"Kähler row {_row} with a symplectic form",
              tuple(_base) + tuple(_terms), _samples,
              (lambda row: lambda p: table2_data(row, p))(_row), None, ["symplectic", "table2"])


# eta-Einstein central extensions


@dataclass(frozen=True)
class EtaRow:
    base: str
    omega: Callable
    conditions: Callable
    lam_mu: Callable
    flags: Callable  # params -> (quasi_sasakian, alpha_sasakian)
    params: tuple
    samples: tuple


def _nonzero(*names):
    def check(p):
        for n in names:
            _need(p[n] != 0, f"{n} != 0")
    return check


def _all(*checks):
    def check(p):
        for c in checks:
            c(p)
    return check


def _g1_check(p):
    _pos("a", "b")(p)
    _need(p["lam"] != 0 or p["beta"] != 0, "(lam, beta) != (0, 0)")


def _g1_K(p):
    return p["lam"] ** 2 + p["beta"] ** 2 / (p["a"] * p["b"])


def _constraint(text, f):
    def check(p):
        _need(f(p), text)
    return check


def _sign(p):
    _need(p["sign"] in (1, -1), "sign in {1, -1}")


ETA_ROWS: dict[str, EtaRow] = {
    "g1_plus": EtaRow(
        "r4", lambda p: {"12": p["lam"] * p["a"], "34": p["lam"] * p["b"], "13": p["beta"], "24": -p["beta"]},
        _g1_check, lambda p: (-_g1_K(p) / 2, 3 * _g1_K(p) / 2),
        lambda p: (p["beta"] == 0, p["beta"] == 0),
        ("a", "b", "lam", "beta"),
        ({"a": 1, "b": 1, "lam": 1, "beta": 0}, {"a": 2, "b": 3, "lam": 1, "beta": 1},
         {"a": 1, "b": 2, "lam": 0, "beta": 1}, {"a": 3, "b": 1, "lam": 2, "beta": -1})),
    "g1_minus": EtaRow(
        "r4", lambda p: {"12": p["lam"] * p["a"], "34": -p["lam"] * p["b"], "13": p["beta"], "24": p["beta"]},
        _g1_check, lambda p: (-_g1_K(p) / 2, 3 * _g1_K(p) / 2),
        lambda p: (True, False),
        ("a", "b", "lam", "beta"),
        ({"a": 1, "b": 1, "lam": 1, "beta": 0}, {"a": 2, "b": 3, "lam": 1, "beta": 2},
         {"a": 1, "b": 1, "lam": 0, "beta": 1})),
    "g2": EtaRow(
        "rr30", lambda p: {"12": p["lam"] * p["a"], "34": p["mu"] * p["b"]},
        _all(_pos("a", "b"), _nonzero("lam", "mu"),
             _constraint("lam^2/2 + 1/a = mu^2/2", lambda p: p["lam"] ** 2 / 2 + 1 / p["a"] == p["mu"] ** 2 / 2)),
        lambda p: (-p["mu"] ** 2 / 2, 3 * p["mu"] ** 2 / 2 - 1 / p["a"]),
        lambda p: (True, False),
        ("a", "b", "lam", "mu"),
        ({"a": F(2, 3), "b": 1, "lam": 1, "mu": 2}, {"a": 1, "b": 2, "lam": F(1, 2), "mu": F(3, 2)},
         {"a": F(2, 3), "b": 5, "lam": -1, "mu": 2})),
    "g3": EtaRow(
        "rr30_prime", lambda p: {"14": p["lam"] * p["a"], "23": p["sign"] * p["lam"] * p["b"]},
        _all(_pos("a", "b"), _nonzero("lam"), _sign),
        lambda p: (-p["lam"] ** 2 / 2, 3 * p["lam"] ** 2 / 2),
        lambda p: (True, p["sign"] == 1),
        ("a", "b", "lam", "sign"),
        ({"a": 1, "b": 1, "lam": 2, "sign": 1}, {"a": 2, "b": 3, "lam": 1, "sign": -1},
         {"a": 3, "b": 1, "lam": F(1, 2), "sign": 1}, {"a": 1, "b": 1, "lam": 2, "sign": -1})),
    "g4": EtaRow(
        "r2r2", lambda p: {"12": p["lam"] * p["a"], "34": p["mu"] * p["b"]},
        _all(_pos("a", "b"), _nonzero("lam", "mu"),
             _constraint("lam^2/2 + 1/a = mu^2/2 + 1/b",
                         lambda p: p["lam"] ** 2 / 2 + 1 / p["a"] == p["mu"] ** 2 / 2 + 1 / p["b"])),
        lambda p: (-p["lam"] ** 2 / 2 - 1 / p["a"], p["lam"] ** 2 + p["mu"] ** 2 / 2 + 1 / p["a"]),
        lambda p: (True, p["lam"] == p["mu"] and p["a"] == p["b"]),
        ("a", "b", "lam", "mu"),
        ({"a": 1, "b": 1, "lam": 1, "mu": 1}, {"a": 1, "b": 1, "lam": 1, "mu": -1},
         {"a": F(1, 2), "b": F(2, 7), "lam": 2, "mu": 1}, {"a": 2, "b": 2, "lam": 3, "mu": 3})),
    "g5_J1": EtaRow(
        "r4_0_delta_J1", lambda p: {"14": p["lam"] * p["a"], "23": p["mu"] * p["b"]},
        _all(_r4_conditions(1), _constraint("delta > 0", lambda p: p["delta"] > 0), _nonzero("lam", "mu"),
             _constraint("lam^2/2 - 1/a = mu^2/2", lambda p: p["lam"] ** 2 / 2 - 1 / p["a"] == p["mu"] ** 2 / 2)),
        lambda p: (-p["mu"] ** 2 / 2, 3 * p["mu"] ** 2 / 2 + 1 / p["a"]),
        lambda p: (True, False),
        ("a", "b", "delta", "lam", "mu"),
        ({"a": F(-2, 3), "b": 1, "delta": 1, "lam": 1, "mu": 2},
         {"a": -1, "b": 3, "delta": 2, "lam": F(1, 2), "mu": F(3, 2)})),
    "g5_J2": EtaRow(
        "r4_0_delta_J2", lambda p: {"14": p["lam"] * p["a"], "23": p["mu"] * p["b"]},
        _all(_r4_conditions(-1), _constraint("delta > 0", lambda p: p["delta"] > 0), _nonzero("lam", "mu"),
             _constraint("lam^2/2 - 1/a = mu^2/2", lambda p: p["lam"] ** 2 / 2 - 1 / p["a"] == p["mu"] ** 2 / 2)),
        lambda p: (-p["mu"] ** 2 / 2, 3 * p["mu"] ** 2 / 2 + 1 / p["a"]),
        lambda p: (True, False),
        ("a", "b", "delta", "lam", "mu"),
        ({"a": F(-2, 3), "b": -1, "delta": 1, "lam": 1, "mu": 2},
         {"a": -1, "b": -2, "delta": 3, "lam": F(1, 2), "mu": F(-3, 2)})),
    "g6": EtaRow(
        "d4_half", lambda p: {"12": p["lam"] * p["a"], "34": -p["lam"] * p["a"]},
        _all(_pos("a"), _nonzero("lam")),
        lambda p: (-p["lam"] ** 2 / 2 - F(3, 2) / p["a"], 3 * p["lam"] ** 2 / 2 + F(3, 2) / p["a"]),
        lambda p: (True, True),
        ("a", "lam"),
        ({"a": 1, "lam": 1}, {"a": 3, "lam": -2}, {"a": F(1, 2), "lam": F(1, 3)})),
    "g7_J1": EtaRow(
        "d4_delta_J1", lambda p: {"12": p["lam"] * p["a"], "34": -p["lam"] * p["a"] * p["delta"]},
        _all(_dp_conditions(1), _nonzero("lam")),
        lambda p: (-p["lam"] ** 2 / 2 - 3 * p["delta"] / (2 * p["a"]), 3 * p["lam"] ** 2 / 2 + 3 * p["delta"] / (2 * p["a"])),
        lambda p: (True, True),
        ("a", "delta", "lam"),
        ({"a": 1, "delta": 1, "lam": 1}, {"a": 2, "delta": 3, "lam": -1}, {"a": F(1, 2), "delta": F(1, 4), "lam": 2})),
    "g7_J3": EtaRow(
        "d4_delta_J3", lambda p: {"12": p["lam"] * p["a"], "34": -p["lam"] * p["a"] * p["delta"]},
        _all(_dp_conditions(-1), _nonzero("lam")),
        lambda p: (-p["lam"] ** 2 / 2 + 3 * p["delta"] / (2 * p["a"]), 3 * p["lam"] ** 2 / 2 - 3 * p["delta"] / (2 * p["a"])),
        lambda p: (True, True),
        ("a", "delta", "lam"),
        ({"a": -1, "delta": 1, "lam": 1}, {"a": -2, "delta": 3, "lam": F(1, 2)})),
}


def eta_structure(row: str, p: Mapping[str, Fraction]) -> AcmStructure:
    r = ETA_ROWS[row]
    r.conditions(p)
    K = _r4_kahler(p) if r.base == "r4" else table1_kahler(r.base, p)
    return extend(K, r.omega(p))


def _eta_expected(r: EtaRow):
    def expected(p):
        lam, mu = r.lam_mu(p)
        qs, als = r.flags(p)
        return {"eta_einstein_lambda": lam, "eta_einstein_mu": mu, "quasi_sasakian": qs,
                "alpha_sasakian": als, "transversely_kahler": True}
    return expected


for _row, _r in ETA_ROWS.items():
    _register(f"eta_{_row}", "acm", f"eta-Einstein central extension {_row} of the Kähler row {_r.base}",
              _r.params, _r.samples, (lambda row: lambda p: eta_structure(row, p))(_row),
              _eta_expected(_r), ["eta_einstein"])


# alpha-Sasakian structures with trivial center

THM13_PHI = Matrix([[0, 1, 0, 0, 0], [-1, 0, 0, 0, 0], [0, 0, 0, 1, 0], [0, 0, -1, 0, 0], [0, 0, 0, 0, 0]])


def thm13_coefficients(family: str, p: Mapping[str, Fraction]) -> dict[str, Fraction]:
    """Resolve the free parameters of a family into ``a1, b1, c2, c3, c4, f4, b6, k1``."""
    k1 = p["k1"]
    _need(k1 != 0, "k1 != 0")
    c = {"a1": F(0), "b1": F(0), "c2": F(0), "c3": F(0), "c4": F(0), "f4": F(0), "b6": F(0), "k1": k1}
    if family == "A1":
        _need(p["c3"] != 0, "c3 != 0")
        c.update(c3=p["c3"], f4=p["f4"], a1=-k1 / p["c3"])
    elif family == "A2":
        _need(p["b1"] != 0, "b1 != 0")
        c.update(a1=p["a1"], b1=p["b1"], c3=p["c3"], f4=(k1 + p["a1"] * p["c3"]) / p["b1"])
    elif family == "A3":
        _need(p["a1"] != 0, "a1 != 0")
        c.update(a1=p["a1"], f4=p["f4"], c3=-k1 / p["a1"], c4=-p["a1"] / 2)
    elif family == "A4":
        _need(p["b1"] != 0, "b1 != 0")
        c.update(a1=p["a1"], b1=p["b1"], c3=p["c3"], c2=p["b1"] / 2, c4=-p["a1"] / 2,
                 f4=(k1 + p["a1"] * p["c3"]) / p["b1"])
    elif family == "B1":
        _need(p["a1"] != 0, "a1 != 0")
        c.update(a1=p["a1"], f4=p["f4"], c3=k1 / p["a1"])
    elif family == "B2":
        _need(p["b1"] != 0, "b1 != 0")
        c.update(a1=p["a1"], b1=p["b1"], c3=p["c3"], f4=(p["a1"] * p["c3"] - k1) / p["b1"])
    elif family == "B3":
        _need(p["a1"] != 0, "a1 != 0")
        c.update(a1=p["a1"], f4=p["f4"], c3=k1 / p["a1"], c4=-p["a1"] / 2)
    elif family == "B4":
        _need(p["b1"] != 0, "b1 != 0")
        c.update(a1=p["a1"], b1=p["b1"], b6=p["b1"], c3=p["c3"], c4=-p["a1"] / 2,
                 f4=(p["a1"] * p["c3"] - k1) / p["b1"])
    else:
        raise KeyError(family)
    return c


def thm13_algebra(family: str, p: Mapping[str, Fraction]) -> LieAlgebra:
    c = thm13_coefficients(family, p)
    a1, b1, c2, c3, c4, f4, b6, k1 = (c[k] for k in ("a1", "b1", "c2", "c3", "c4", "f4", "b6", "k1"))
    if family.startswith("A"):
        diffs = [
            {(1, 2): a1, (3, 4): -2 * c4},
            {(1, 2): b1, (3, 4): 2 * c2},
            {(1, 3): c2, (1, 4): c3, (2, 3): c4, (2, 4): -f4, (4, 5): -1},
            {(1, 3): -c3, (1, 4): c2, (2, 3): f4, (2, 4): c4, (3, 5): 1},
            {(1, 2): k1, (3, 4): k1},
        ]
    else:
        diffs = [
            {(1, 2): a1, (3, 4): -2 * c4},
            {(1, 2): b1, (3, 4): b6},
            {(1, 3): b6 / 2, (1, 4): c3, (2, 3): c4, (2, 4): -f4, (4, 5): 1},
            {(1, 3): -c3, (1, 4): b6 / 2, (2, 3): f4, (2, 4): c4, (3, 5): -1},
            {(1, 2): k1, (3, 4): k1},
        ]
    return LieAlgebra.from_differentials(diffs)


def thm13_structure(family: str, p: Mapping[str, Fraction]) -> AcmStructure:
    L = thm13_algebra(family, p)
    return AcmStructure(MetricLieAlgebra(L, Matrix.identity(5)), THM13_PHI, unit_vector(5, 4))


def thm13_basis_change(family: str, p: Mapping[str, Fraction]) -> Matrix:
    """Columns are the adapted bases ``E``/``G`` (families 3) and ``F``/``H`` (families 4)."""
    c = thm13_coefficients(family, p)
    a1, b1, k1 = c["a1"], c["b1"], c["k1"]
    if family in ("A3", "B3"):
        first, second = (a1, 0, 0, 0, k1), (0, 1 / a1, 0, 0, 0)
    elif family in ("A4", "B4"):
        first, second = (a1, b1, 0, 0, k1), (1 / b1, 0, 0, 0, 0)
    else:
        raise KeyError(f"no adapted basis for family {family}")
    cols = [first, second] + [unit_vector(5, j) for j in (2, 3, 4)]
    return Matrix.from_columns([tuple(scalar(x) for x in col) for col in cols])


THM13_PARAMS = {
    "A1": (("k1", "c3", "f4"), ({"k1": 1, "c3": 1, "f4": 0}, {"k1": 2, "c3": -1, "f4": 3}, {"k1": -1, "c3": 2, "f4": 1})),
    "A2": (("k1", "a1", "b1", "c3"), ({"k1": 1, "a1": 1, "b1": 1, "c3": 1}, {"k1": -2, "a1": 3, "b1": 2, "c3": F(1, 2)})),
    "A3": (("k1", "a1", "f4"), ({"k1": 1, "a1": 1, "f4": 0}, {"k1": 2, "a1": -2, "f4": 1}, {"k1": -1, "a1": 3, "f4": 2})),
    "A4": (("k1", "a1", "b1", "c3"), ({"k1": 1, "a1": 1, "b1": 1, "c3": 1}, {"k1": 2, "a1": -1, "b1": 2, "c3": 3})),
    "B1": (("k1", "a1", "f4"), ({"k1": 1, "a1": 1, "f4": 0}, {"k1": -2, "a1": 2, "f4": 1})),
    "B2": (("k1", "a1", "b1", "c3"), ({"k1": 1, "a1": 1, "b1": 1, "c3": 1}, {"k1": 3, "a1": -1, "b1": 2, "c3": 2})),
    "B3": (("k1", "a1", "f4"), ({"k1": 1, "a1": 1, "f4": 0}, {"k1": 2, "a1": -2, "f4": 1}, {"k1": -1, "a1": 3, "f4": 2})),
    "B4": (("k1", "a1", "b1", "c3"), ({"k1": 1, "a1": 1, "b1": 1, "c3": 1}, {"k1": 2, "a1": -1, "b1": 2, "c3": 3})),
}

for _fam, (_params, _samples) in THM13_PARAMS.items():
    _register(f"thm13_{_fam}", "acm", f"alpha-Sasakian structure with trivial center, family {_fam}",
              _params, _samples, (lambda fam: lambda p: thm13_structure(fam, p))(_fam),
              lambda p: {"alpha_sasakian": True, "alpha": p["k1"] / 2, "normal": True},
              ["alpha_sasakian"])


# public API


def list_fixtures() -> list[tuple[str, tuple]]:
    """``(name, parameter names)`` in registration order."""
    return [(f.name, f.params) for f in _REGISTRY.values()]


def get_fixture(name: str) -> Fixture:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}") from None


def instantiate(name: str, params: Mapping[str, Number] | None = None):
    return get_fixture(name).instantiate(params)


def fixtures(kind: str | None = None, tag: str | None = None) -> list[Fixture]:
    return [f for f in _REGISTRY.values() if (kind is None or f.kind == kind) and (tag is None or tag in f.tags)]


def sasakian_admitting() -> list[str]:
    """Fixtures whose algebra is known to carry a Sasakian structure."""
    return [f.name for f in _REGISTRY.values() if "sasakian" in f.tags]
