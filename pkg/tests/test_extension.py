from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acmlie import catalog
from acmlie.errors import DegenerateOmega, NotMaximalRank, NotTransverselyKahler, OmegaNotClosed, TrivialCenter
from acmlie.exact import Matrix, determinant, rank, unit_vector
from acmlie.extension import (
    SymplecticKahlerData,
    central_extend,
    fit_eta_einstein,
    is_null_eta_einstein,
    kahler_quotient,
    lemma9_defect_report,
    lemma9_defects,
    lemma9_rhs,
    ricci_prop10,
    transverse_ricci,
)
from acmlie.forms import KForm, is_contact
from acmlie.lie import center, is_unimodular
from acmlie.riemannian import MetricLieAlgebra, is_flat, ricci
from acmlie.structures import AcmStructure, classify, nijenhuis_eval, omega_invariance_type
from strategies import rationals

TABLE2 = []
for _fx in catalog.fixtures(kind="symplectic"):
    for _i, _s in enumerate(_fx.samples):
        TABLE2.append(pytest.param(_fx.instantiate(_s), id=f"{_fx.name}-{_i}"))

R4 = catalog.instantiate("r4_kahler")


def _data(K, comps):
    return SymplecticKahlerData(K, KForm.from_labels(K.dim, comps))


# extension and quotient


def test_abelian_extension_is_h5():
    S = central_extend(_data(R4, {"12": 2, "34": 3})).S
    assert S.L.c(0, 1) == (0, 0, 0, 0, -2) and S.L.c(2, 3) == (0, 0, 0, 0, -3)
    assert center(S.L).dim == 1 and center(S.L).contains(S.xi)
    assert S.d_eta() == KForm.from_labels(5, {"12": 2, "34": 3})
    assert is_contact(S.L, S.eta)


def test_rr30_prime_extension_is_alpha_sasakian():
    K = catalog.table1_kahler("rr30_prime", {"a": Fraction(1), "b": Fraction(1)})
    lam = 2
    rep = classify(central_extend(_data(K, {"14": lam, "23": lam})).S)
    assert rep.alpha_sasakian and 2 * rep.alpha == -lam


def test_invalid_forms_rejected():
    with pytest.raises(DegenerateOmega):
        _data(R4, {"12": 1})
    K = catalog.table1_kahler("rr30", {"a": Fraction(1), "b": Fraction(1)})
    with pytest.raises(OmegaNotClosed):
        _data(K, {"12": 1, "34": 1, "24": 1})


@pytest.mark.parametrize("D", TABLE2)
def test_extension_invariants_and_round_trip(D):
    res = central_extend(D)
    S = res.S
    assert res.xi_index == D.dim and S.xi == unit_vector(D.dim + 1, D.dim)
    z = center(S.L)
    assert z.dim == 1 and z.contains(S.xi)
    deta = S.d_eta()
    E = [res.inclusion @ unit_vector(D.dim, i) for i in range(D.dim)]
    for i, j in combinations(range(D.dim), 2):
        assert deta(E[i], E[j]) == D.w(unit_vector(D.dim, i), unit_vector(D.dim, j))
    if catalog_integrable(D):
        assert classify(S).transversely_kahler
        assert kahler_quotient(S) == D
    else:
        with pytest.raises(NotTransverselyKahler):
            kahler_quotient(S)


def catalog_integrable(D):
    from acmlie.structures import validate_kahler

    return validate_kahler(D.K).ok


@pytest.mark.parametrize("D", TABLE2)
def test_horizontal_nijenhuis(D):
    S = central_extend(D).S
    m = D.dim
    E = [unit_vector(m, i) for i in range(m)]
    J = D.K.J
    if not catalog_integrable(D):
        pytest.skip("tabulated complex structure is not integrable")
    for x in E:
        for y in E:
            got = nijenhuis_eval(S.L, S.phi, tuple(x) + (0,), tuple(y) + (0,), S.d_eta(), S.xi)
            coeff = -D.w(J @ x, J @ y) + D.w(x, y)
            assert got == tuple(coeff * v for v in S.xi)


def test_quotient_of_h5_is_flat_r4():
    M, phis, xi = catalog.h5_double_aqs_triple(1)
    D = kahler_quotient(AcmStructure(M, phis[2], xi))
    assert not D.K.L.nonzero_brackets()
    assert is_flat(D.K.M)
    assert rank(D.w.matrix()) == 4


def test_quotient_errors():
    from strategies import frame_structure

    with pytest.raises(TrivialCenter):
        kahler_quotient(frame_structure(catalog.instantiate("g0"), Matrix.identity(5)))
    with pytest.raises(NotMaximalRank):
        kahler_quotient(catalog.instantiate("r5_cokahler"))
    A1 = catalog.instantiate("thm13_A1")
    with pytest.raises((TrivialCenter, NotTransverselyKahler)):
        kahler_quotient(A1)


@settings(max_examples=15)
@given(st.lists(rationals, min_size=6, max_size=6), st.sampled_from([(1, 1), (2, 3), (Fraction(1, 2), 5)]))
def test_round_trip_on_abelian_base(cs, ab):
    a, b = ab
    K = catalog.instantiate("r4_kahler", {"a": a, "b": b})
    w = KForm(4, 2, dict(zip(combinations(range(4), 2), cs)))
    if determinant(w.matrix()) == 0:
        return
    D = SymplecticKahlerData(K, w)
    assert kahler_quotient(central_extend(D).S) == D
    assert lemma9_defects(D) == 0


# curvature of the extension


def test_prop10_examples():
    for lam in (1, 2, Fraction(-1, 3)):
        rho = ricci_prop10(_data(R4, {"12": lam, "34": lam})).entries
        assert rho[4, 4] == Fraction(lam) ** 2
        assert all(rho[i, j] == (-Fraction(lam) ** 2 / 2 if i == j else 0) for i in range(4) for j in range(4))
    K = catalog.table1_kahler("rr30_prime", {"a": Fraction(1), "b": Fraction(1)})
    D = _data(K, {"14": 2, "23": 2})
    S = central_extend(D).S
    eta = S.eta.covector()
    want = Matrix([[-2 * S.g[i, j] + 6 * eta[i] * eta[j] for j in range(5)] for i in range(5)])
    assert ricci_prop10(D).entries == want == ricci(S.M).entries


@pytest.mark.parametrize("D", TABLE2)
def test_prop10_matches_koszul(D):
    assert ricci_prop10(D) == ricci(central_extend(D).S.M)


@pytest.mark.parametrize("D", TABLE2)
def test_lemma9(D):
    rep = lemma9_defect_report(D)
    assert set(rep) == {"cg1.1", "cg1.2", "cg1.3", "connection"}
    assert max(rep.values()) == 0


def test_lemma9_detects_sign_error():
    D = _data(catalog.table1_kahler("rr30", {"a": Fraction(1), "b": Fraction(2)}), {"12": 1, "34": 1})
    pred = lemma9_rhs(D)
    key = next(k for k, v in pred.R_hhhh.items() if v)
    pred.R_hhhh[key] = -pred.R_hhhh[key]
    assert lemma9_defect_report(D, pred)["cg1.1"] != 0


def test_lemma9_abelian_mixed_terms_vanish():
    pred = lemma9_rhs(_data(R4, {"13": 1, "24": -2, "12": 1}))
    assert not any(pred.R_hhhv.values())


def test_perturbed_form_breaks_mixed_ricci():
    base = catalog.table1_kahler("rr30", {"a": Fraction(1), "b": Fraction(1)})
    good = ricci_prop10(_data(base, {"12": 1, "34": 1})).entries
    assert all(good[4, j] == 0 for j in range(4))
    bent = ricci_prop10(_data(base, {"12": 1, "34": 1, "13": 1})).entries
    assert any(bent[4, j] != 0 for j in range(4))


# eta-Einstein fits


def test_fit_examples():
    fit = fit_eta_einstein(catalog.instantiate("eta_g3", {"a": 1, "b": 1, "lam": 2, "sign": 1}))
    assert (fit.lam, fit.mu, fit.exact) == (-2, 6, True)
    fit = fit_eta_einstein(catalog.instantiate("r5_cokahler"))
    assert (fit.lam, fit.mu, fit.exact, fit.residual_max) == (0, 0, True, 0)
    assert fit.einstein


def test_fit_negative_controls():
    K = catalog.table1_kahler("rr30", {"a": Fraction(1), "b": Fraction(1)})
    # lam^2/2 + 1/a = mu^2/2 violated at a = b = lam = mu = 1
    S = central_extend(_data(K, {"12": 1, "34": 1})).S
    fit = fit_eta_einstein(S)
    assert not fit.exact and fit.residual_max > 0
    S = catalog.instantiate("eta_g3", {"a": 1, "b": 1, "lam": 2, "sign": 1})
    g = Matrix([[S.g[i, j] + (Fraction(1, 2) if {i, j} == {0, 1} else 0) for j in range(5)] for i in range(5)])
    bent = fit_eta_einstein(AcmStructure(MetricLieAlgebra(S.L, g), S.phi, S.xi, check=False))
    assert not bent.exact and bent.residual_max > 0


def test_transverse_ricci_examples():
    M, phis, xi = catalog.h5_double_aqs_triple(1)
    for phi in phis:
        assert transverse_ricci(AcmStructure(M, phi, xi)).is_zero()
    assert is_null_eta_einstein(catalog.instantiate("eta_g3", {"a": 1, "b": 1, "lam": 2, "sign": 1}))
    S = catalog.instantiate("eta_g4", {"a": 1, "b": 1, "lam": 1, "mu": -1})
    h = kahler_quotient(S).K.h
    assert transverse_ricci(S).entries == -h


def test_unimodular_extensions_are_null_eta_einstein():
    seen = 0
    for fx in catalog.fixtures(kind="symplectic"):
        for s in fx.samples:
            D = fx.instantiate(s)
            S = central_extend(D).S
            if is_unimodular(S.L) and catalog_integrable(D):
                seen += 1
                assert is_null_eta_einstein(S)
    assert seen >= 2


# invariance type of omega against the extension flags


@pytest.mark.parametrize("row", ["rr30", "rr30_prime", "r2r2", "d4_half", "r4"])
def test_invariance_type_dichotomy(row):
    fx = catalog.get_fixture(f"table2_{row}")
    for s in fx.samples:
        D = fx.instantiate(s)
        kind = omega_invariance_type(D.K, D.w)
        rep = classify(central_extend(D).S)
        assert (kind == "J_invariant") == rep.quasi_sasakian
        assert (kind == "J_anti_invariant") == rep.anti_quasi_sasakian
