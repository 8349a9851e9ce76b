from fractions import Fraction

import pytest

from acmlie import catalog
from acmlie.errors import ParamConstraintViolation
from acmlie.exact import Matrix
from acmlie.forms import KForm, exterior_derivative, is_contact
from acmlie.lie import change_basis, jacobi_violation
from acmlie.riemannian import MetricLieAlgebra
from acmlie.structures import AcmStructure, KahlerStructure, classify, fundamental_form, nijenhuis, validate_kahler

F = Fraction
THM13 = [f"thm13_{fam}" for fam in catalog.THM13_PARAMS]


def test_listing():
    names = [n for n, _ in catalog.list_fixtures()]
    assert names == [n for n, _ in catalog.list_fixtures()]
    assert "h5_double_aqs" in names
    rows = [n for n in names if n.startswith("table1_")]
    assert rows[0] == "table1_rr30" and rows[-1] == "table1_d4_delta_J3" and len(rows) == 9
    assert [n for n in names if n.startswith("thm13_")] == THM13
    assert THM13[0] == "thm13_A1" and THM13[-1] == "thm13_B4"
    assert len([n for n in names if n.startswith("eta_")]) == 10
    assert dict(catalog.list_fixtures())["table1_rr30"] == ("a", "b")


def test_every_sample_builds():
    for fx in catalog.fixtures():
        assert len(fx.samples) >= 1
        for s in fx.samples:
            obj = fx.instantiate(s)
            L = getattr(obj, "L", None) or getattr(getattr(obj, "K", None), "L", None) or obj
            assert jacobi_violation(L) is None, fx.name


def test_parametric_rows_have_two_samples():
    for fx in catalog.fixtures():
        if fx.params and any(t in fx.tags for t in ("table1", "table2", "eta_einstein", "alpha_sasakian")):
            assert len(fx.samples) >= 2, fx.name


def test_instantiate_examples():
    K = catalog.instantiate("table1_rr30", {"a": 1, "b": 1})
    assert isinstance(K, KahlerStructure) and validate_kahler(K).ok
    rep = classify(catalog.instantiate("thm13_A1", {"k1": 1, "c3": 1, "f4": 0}))
    assert rep.alpha_sasakian and rep.alpha == F(1, 2)


@pytest.mark.parametrize("name, params, text", [
    ("eta_g2", {"a": 2, "b": 1, "lam": 1, "mu": 1}, "lam^2/2 + 1/a = mu^2/2"),
    ("table1_rr30", {"a": -1, "b": 1}, "a > 0"),
    ("thm13_A1", {"k1": 1, "c3": 0, "f4": 0}, "c3 != 0"),
    ("thm13_A1", {"k1": 0, "c3": 1, "f4": 0}, "k1 != 0"),
    ("sasaki_g7", {"delta": 0}, "delta"),
])
def test_constraint_violations(name, params, text):
    with pytest.raises(ParamConstraintViolation, match="parameter constraint violated") as exc:
        catalog.instantiate(name, params)
    assert text in str(exc.value)


def test_bad_parameters():
    with pytest.raises(ParamConstraintViolation):
        catalog.instantiate("table1_rr30", {"a": 1, "b": 1, "c": 2})
    with pytest.raises(ParamConstraintViolation):
        catalog.instantiate("table1_rr30", {"a": "x", "b": 1})
    with pytest.raises(KeyError, match="unknown fixture"):
        catalog.get_fixture("nope")


def test_eta_g2_documented_sample():
    S = catalog.instantiate("eta_g2", {"a": F(2, 3), "b": 1, "lam": 1, "mu": 2})
    rep = classify(S)
    assert rep.eta_einstein and rep.eta_einstein_lambda == -2 and rep.eta_einstein_mu == F(9, 2)


@pytest.mark.parametrize("name", THM13)
def test_alpha_sasakian_families(name):
    fx = catalog.get_fixture(name)
    assert len(fx.samples) >= 2
    for s in fx.samples:
        S = fx.instantiate(s)
        k1 = fx.resolve(s)["k1"]
        for k in range(5):
            assert exterior_derivative(S.L, exterior_derivative(S.L, KForm.basis(5, str(k + 1)))).is_zero()
        assert all(not any(v) for row in nijenhuis(S) for v in row)
        assert exterior_derivative(S.L, fundamental_form(S)).is_zero()
        assert S.d_eta() == fundamental_form(S) * k1
        rep = classify(S)
        assert rep.alpha_sasakian and rep.alpha == k1 / 2 and rep.normal


def _ad_block(L, x, idx):
    return Matrix([[L.c(x, j)[i] for j in idx] for i in idx])


@pytest.mark.parametrize("family", ["A3", "A4", "B3", "B4"])
def test_adapted_bases(family):
    for s in catalog.THM13_PARAMS[family][1]:
        p = catalog.get_fixture(f"thm13_{family}").resolve(s)
        c = catalog.thm13_coefficients(family, p)
        L = change_basis(catalog.thm13_algebra(family, p), catalog.thm13_basis_change(family, p))
        ideal = [0, 2, 3]
        # R^2 = span{X2, X5} is abelian and acts on the Heisenberg ideal span{X1, X3, X4}
        assert not any(L.c(1, 4))
        assert L.c(2, 3) == (0, 0, 0, 0, 0) or L.c(2, 3)[0] != 0
        for x in (1, 4):
            for j in ideal:
                assert L.c(x, j)[1] == 0 and L.c(x, j)[4] == 0
        assert not any(L.c(0, 2)) and not any(L.c(0, 3)) and L.c(2, 3)[0] != 0
        if family.endswith("3"):
            r = c["f4"] / c["a1"]
            want2 = Matrix([[1, 0, 0], [0, F(1, 2), r], [0, -r, F(1, 2)]])
        else:
            r = c["c3"] / c["b1"]
            want2 = Matrix([[-1, 0, 0], [0, F(-1, 2), -r], [0, r, F(-1, 2)]])
        sign = 1 if family.startswith("A") else -1
        want5 = Matrix([[0, 0, 0], [0, 0, -sign], [0, sign, 0]])
        assert _ad_block(L, 1, ideal) == want2
        assert _ad_block(L, 4, ideal) == want5


def test_sasakian_admitting_set():
    names = catalog.sasakian_admitting()
    assert "sl2_semidirect_r2" not in names
    assert {f"sasaki_g{i}" for i in range(1, 9)} <= set(names)
    assert "h5_double_aqs" in names


def test_tabulated_g6_is_not_contact():
    L = catalog.instantiate("g6_printed")
    assert not is_contact(L, KForm.basis(5, "5"))
    S = catalog.instantiate("sasaki_g6")
    assert classify(S).sasakian


def test_d42_data():
    printed = catalog.instantiate("table1_d4_2")
    assert not validate_kahler(printed).ok
    for t in (1, 2, F(1, 3)):
        K = catalog.d42_kahler(t)
        assert validate_kahler(K).ok
        assert K.kahler_form() == KForm.from_labels(4, catalog.D42_KAHLER_OMEGA) * t
    assert catalog.D42_KAHLER_J @ catalog.D42_KAHLER_J == -Matrix.identity(4)


def test_expected_fragments_are_reproduced():
    for fx in catalog.fixtures(kind="acm"):
        for s in fx.samples:
            rep = classify(fx.instantiate(s))
            for key, value in fx.expected_for(s).items():
                if hasattr(rep, key):
                    assert getattr(rep, key) == value, (fx.name, s, key)


def test_cokahler_and_h5_builders():
    S = catalog.instantiate("r5_cokahler")
    assert isinstance(S, AcmStructure) and S.d_eta().is_zero()
    M, phis, xi = catalog.h5_double_aqs_triple(F(1, 2))
    assert isinstance(M, MetricLieAlgebra) and len(phis) == 3
