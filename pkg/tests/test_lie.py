from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from acmlie import catalog
from acmlie.errors import InvalidLieAlgebra, SingularMatrix
from acmlie.exact import Matrix, invert, unit_vector
from acmlie.lie import (
    LieAlgebra,
    ad,
    center,
    change_basis,
    derived_algebra,
    derived_series,
    invariant_fingerprint,
    is_unimodular,
    jacobi_defect,
    jacobi_violation,
    killing_form,
    parse_structure_equations,
)
from strategies import invertible_matrices

H5 = LieAlgebra.from_brackets(5, {(1, 4): {5: 2}, (2, 3): {5: 2}})
SL2 = LieAlgebra.from_brackets(3, {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}})


def _lie_fixtures():
    out = []
    for fx in catalog.fixtures():
        obj = fx.instantiate()
        L = obj if isinstance(obj, LieAlgebra) else getattr(obj, "L", None) or obj.K.L
        out.append(pytest.param(L, id=fx.name))
    return out


LIE_FIXTURES = _lie_fixtures()


def test_jacobi_examples():
    assert jacobi_defect(LieAlgebra.abelian(5)) == 0
    assert jacobi_defect(H5) == 0
    bad = LieAlgebra.from_brackets(3, {(1, 2): {3: 1}, (1, 3): {1: 1}}, check=False)
    # [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = 0 + [e2,-e1] + 0 = e3
    assert jacobi_defect(bad) == 1
    assert jacobi_violation(bad) == (0, 1, 2)
    with pytest.raises(InvalidLieAlgebra, match=r"jacobi \(1,2,3\)"):
        LieAlgebra.from_brackets(3, {(1, 2): {3: 1}, (1, 3): {1: 1}})


@pytest.mark.parametrize("L", LIE_FIXTURES)
def test_every_catalog_algebra_satisfies_jacobi(L):
    assert jacobi_defect(L) == 0


def test_structure_equations_follow_bracket_sign():
    L = parse_structure_equations("(0,-e^{13},e^{12},0)")
    # d e^k = -sum c^k_ij e^ij
    assert L.c(0, 1) == (0, 0, -1, 0)
    assert L.c(0, 2) == (0, 1, 0, 0)
    assert parse_structure_equations("(0,0,0,0,e^{12}+e^{34})") == LieAlgebra.from_brackets(
        5, {(1, 2): {5: -1}, (3, 4): {5: -1}})


def test_center_examples():
    assert center(LieAlgebra.abelian(5)).dim == 5
    z = center(H5)
    assert z.dim == 1 and z.contains(unit_vector(5, 4))
    assert center(catalog.instantiate("g0")).dim == 0


def test_derived_algebra_examples():
    assert derived_algebra(LieAlgebra.abelian(4)).dim == 0
    d = derived_algebra(H5)
    assert d.dim == 1 and d.contains(unit_vector(5, 4))
    assert derived_algebra(catalog.instantiate("sl2_x_aff")).dim == 4
    assert derived_series(H5) == (5, 1, 0)


def test_unimodular_examples():
    assert is_unimodular(H5)
    assert is_unimodular(LieAlgebra.abelian(3))
    g2 = catalog.instantiate("eta_g2").L
    assert not is_unimodular(g2)
    assert ad(g2, unit_vector(5, 0)).trace() != 0


def test_ad_examples():
    assert ad(LieAlgebra.abelian(3), (1, 2, 3)).is_zero()
    assert ad(H5, unit_vector(5, 4)).is_zero()
    A = ad(H5, unit_vector(5, 0))
    assert A.col(3) == (0, 0, 0, 0, 2)


def test_ad_xi_on_alpha_sasakian_family():
    S = catalog.instantiate("thm13_A1")
    A = ad(S.L, S.xi)
    expected = Matrix([[0] * 5, [0] * 5, [0, 0, 0, -1, 0], [0, 0, 1, 0, 0], [0] * 5])
    assert A == expected


def test_sl2_killing_form():
    # basis h, x, y: B(h,h) = 8, B(x,y) = 4
    assert killing_form(SL2) == Matrix([[8, 0, 0], [0, 0, 4], [0, 4, 0]])


def test_change_basis_examples():
    assert change_basis(H5, Matrix.identity(5)) == H5
    lam = Fraction(3)
    P = Matrix.diag([1, 1, 1, 1, 1 / lam])
    assert change_basis(H5, P).c(0, 3) == (0, 0, 0, 0, 2 * lam)
    with pytest.raises(SingularMatrix):
        change_basis(H5, Matrix.diag([1, 1, 1, 1, 0]))


def test_fingerprints():
    assert invariant_fingerprint(H5) != invariant_fingerprint(LieAlgebra.abelian(5))
    g5 = invariant_fingerprint(catalog.instantiate("sasaki_g5").L)
    # B(e4, e4) = 3 delta^2 / 2 - 2 on g_7^delta, so the signature depends on delta
    assert g5 == invariant_fingerprint(catalog.instantiate("sasaki_g7", {"delta": 2}).L)
    assert g5 != invariant_fingerprint(catalog.instantiate("sasaki_g7", {"delta": 1}).L)
    sl2 = invariant_fingerprint(catalog.instantiate("sl2_x_aff"))
    su2 = invariant_fingerprint(catalog.instantiate("su2_x_aff"))
    assert sl2.killing_signature != su2.killing_signature
    assert su2.killing_signature[1] == 3


_BASES = [catalog.instantiate(n) for n in ("g0", "sl2_x_aff", "su2_x_aff")] + [
    catalog.instantiate(n).L for n in ("sasaki_g3", "eta_g4", "thm13_B4")]


@given(st.sampled_from(_BASES), invertible_matrices(5))
def test_change_basis_round_trip_and_equivariance(L, P):
    L2 = change_basis(L, P)
    assert jacobi_defect(L2) == 0
    assert change_basis(L2, invert(P)) == L
    Pi = invert(P)
    assert center(L2) == center(L).transform(Pi)
    assert derived_algebra(L2) == derived_algebra(L).transform(Pi)
    assert invariant_fingerprint(L2) == invariant_fingerprint(L)


@given(st.sampled_from(_BASES), st.lists(st.integers(-3, 3), min_size=5, max_size=5),
       st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_ad_trace_is_linear(L, x, y):
    s = tuple(a + b for a, b in zip(x, y))
    assert ad(L, s).trace() == ad(L, x).trace() + ad(L, y).trace()
