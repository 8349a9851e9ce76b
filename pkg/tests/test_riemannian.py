from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from acmlie import catalog
from acmlie.errors import InvalidStructure, NonDiagonalMetric
from acmlie.exact import Matrix, unit_vector
from acmlie.lie import LieAlgebra
from acmlie.riemannian import (
    MetricLieAlgebra,
    curvature,
    frame_ricci,
    is_flat,
    levi_civita,
    ricci,
    riemann,
    scalar_curvature,
)
from strategies import check_levi_civita, invertible_matrices

H5 = LieAlgebra.from_brackets(5, {(1, 4): {5: 2}, (2, 3): {5: 2}})
SU2 = LieAlgebra.from_brackets(3, {(1, 2): {3: 1}, (2, 3): {1: 1}, (3, 1): {2: 1}})
H3 = LieAlgebra.from_brackets(3, {(1, 2): {3: 1}})

ALGEBRAS = [H5, catalog.instantiate("g0"), catalog.instantiate("sl2_x_aff"),
            catalog.instantiate("thm13_B2").L, catalog.instantiate("eta_g5_J1").L]


def _catalog_metrics():
    out = []
    for fx in catalog.fixtures():
        if fx.kind == "lie":
            continue
        obj = fx.instantiate()
        M = getattr(obj, "M", None) or obj.K.M
        out.append(pytest.param(M, id=fx.name))
    return out


def test_abelian_is_flat_for_any_metric():
    M = MetricLieAlgebra(LieAlgebra.abelian(3), Matrix([[2, 1, 0], [1, 2, 0], [0, 0, 5]]))
    assert all(not any(v) for row in levi_civita(M).gamma for v in row)
    assert is_flat(M)
    assert ricci(M).is_zero() and scalar_curvature(M) == 0


def test_rr30_prime_connection():
    K = catalog.instantiate("table1_rr30_prime", {"a": 1, "b": 1})
    conn = levi_civita(K.M)
    e = [unit_vector(4, i) for i in range(4)]
    assert conn.nabla(e[0], e[2]) == e[1]
    assert conn.nabla(e[0], e[1]) == tuple(-x for x in e[2])
    nonzero = [(i, j) for i, j in product(range(4), repeat=2) if any(conn.gamma[i][j])]
    assert nonzero == [(0, 1), (0, 2)]


def test_h5_connection():
    conn = levi_civita(MetricLieAlgebra(H5, Matrix.identity(5)))
    e = [unit_vector(5, i) for i in range(5)]
    assert conn.nabla(e[0], e[3]) == e[4]
    assert conn.nabla(e[0], e[4]) == tuple(-x for x in e[3])


def test_bi_invariant_su2():
    # for a bi-invariant metric: nabla_X Y = [X,Y]/2 and R(X,Y)Z = -[[X,Y],Z]/4
    M = MetricLieAlgebra(SU2, Matrix.identity(3))
    conn = levi_civita(M)
    curv = curvature(M, conn)
    e = [unit_vector(3, i) for i in range(3)]
    for i, j, k in product(range(3), repeat=3):
        assert conn.nabla(e[i], e[j]) == tuple(x / 2 for x in SU2.bracket(e[i], e[j]))
        expected = tuple(-x / 4 for x in SU2.bracket(SU2.bracket(e[i], e[j]), e[k]))
        assert curv.operator(i, j) @ e[k] == expected
    assert ricci(M).entries == Matrix.identity(3) * Fraction(1, 2)


def test_heisenberg_three_ricci():
    # orthonormal [e1,e2] = e3: Ric = diag(-1/2, -1/2, 1/2)
    ric = ricci(MetricLieAlgebra(H3, Matrix.identity(3)))
    assert ric.entries == Matrix.diag([Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2)])


def test_table_examples():
    rr = catalog.instantiate("table1_rr30", {"a": 1, "b": 1})
    assert scalar_curvature(rr.M) == -2
    d = catalog.instantiate("table1_d4_half", {"a": 1})
    assert ricci(d.M).entries == d.h * Fraction(-3, 2)
    assert scalar_curvature(d.M) == -6
    assert frame_ricci(catalog.instantiate("table1_rr30", {"a": 4, "b": 9}).M).diagonal() == (
        Fraction(-1, 4), Fraction(-1, 4), 0, 0)
    for a, b in ((1, 1), (2, 5), (Fraction(1, 3), 7)):
        assert is_flat(catalog.instantiate("table1_rr30_prime", {"a": a, "b": b}).M)


def test_frame_ricci_paths():
    M = MetricLieAlgebra(H3, Matrix.identity(3))
    assert frame_ricci(M).matrix() == ricci(M).entries
    with pytest.raises(NonDiagonalMetric):
        frame_ricci(MetricLieAlgebra(H3, Matrix([[2, 1, 0], [1, 2, 0], [0, 0, 1]])))
    # rr_{3,0} with an extra off-diagonal Ricci entry: a non-square normaliser stays symbolic
    M2 = MetricLieAlgebra(SU2, Matrix.diag([1, 2, 3]))
    fr = frame_ricci(M2)
    assert all(fr.values[i][i] is not None for i in range(3))
    if fr.symbolic:
        for (i, j), (r, norm) in fr.symbolic.items():
            assert norm == M2.g[i, i] * M2.g[j, j]


def test_metric_must_be_positive_definite():
    with pytest.raises(InvalidStructure):
        MetricLieAlgebra(H3, Matrix.diag([1, -1, 1]))


@pytest.mark.parametrize("M", _catalog_metrics())
def test_catalog_metrics_satisfy_identities(M):
    check_levi_civita(M)


def _random_metric(B):
    return B.T @ B


@given(st.sampled_from(ALGEBRAS), invertible_matrices(5, st.integers(-2, 2)))
def test_random_metrics_satisfy_identities(L, B):
    check_levi_civita(MetricLieAlgebra(L, _random_metric(B)))


@given(st.sampled_from(ALGEBRAS), invertible_matrices(5, st.integers(-2, 2)), invertible_matrices(5, st.integers(-1, 1)))
def test_ricci_is_basis_equivariant(L, B, P):
    M = MetricLieAlgebra(L, _random_metric(B))
    M2 = M.change_basis(P)
    assert ricci(M2).entries == P.T @ ricci(M).entries @ P
    assert scalar_curvature(M2) == scalar_curvature(M)


def test_riemann_shape():
    R = riemann(MetricLieAlgebra(H5, Matrix.identity(5)))
    assert len(R) == 5 and len(R[0][0][0]) == 5
