from fractions import Fraction as F

import pytest

from axial import linalg as la
from axial.algebra import identity_element
from axial.axes import (FrobeniusError, NotAnAxisError, axis_check, axis_closure, frobenius_form,
                        gram_determinant, is_automorphism, jordan_law, miyamoto,
                        projection_graph, radical, seress_check, spans_check)
from axial.catalog import algebra_2b, jordan_pair, jordan_pair_gram, nilpotent_frame
from axial.linalg import Subspace


def test_fusion_law_table():
    law = jordan_law(F(1, 2))
    h = F(1, 2)
    assert law(1, 1) == {1} and law(0, 0) == {0} and law(1, 0) == set()
    assert law(1, h) == {h} and law(h, 0) == {h} and law(h, h) == {1, 0}
    with pytest.raises(ValueError):
        jordan_law(1)


def test_axis_in_jordan_pair():
    J = jordan_pair(F(1, 3))
    rep = axis_check(J, J.basis(0))
    assert rep.passed
    assert rep.eigen_dims == {1: 1, 0: 1, F(1, 2): 1}


def test_identity_not_primitive():
    J = jordan_pair(F(1, 3))
    rep = axis_check(J, identity_element(J))
    assert rep.is_idempotent and not rep.primitive and not rep.passed
    assert rep.eigen_dims[1] == 3


def test_non_idempotent_report():
    J = jordan_pair(F(1, 3))
    rep = axis_check(J, J.basis(2))
    assert not rep.is_idempotent and not rep.passed and rep.miyamoto is None


def test_matsuo_points_are_axes(g334):
    M = g334.algebra
    for i in range(M.dim):
        assert axis_check(M, M.basis(i), with_miyamoto=False).passed


def test_miyamoto_on_frame():
    J = jordan_pair(F(9, 8))
    fr = nilpotent_frame(J, J.basis(0), J.basis(1))
    for xi in (F(2), F(-1, 3), 1 / fr.nu):
        d = fr.member(xi)
        tau = miyamoto(J, d)
        assert la.matvec(tau, fr.s) == la.scale(1 / (xi * xi), fr.t)
    rho = la.matmul(miyamoto(J, fr.b), miyamoto(J, fr.a))
    assert la.matvec(rho, fr.s) == la.scale(1 / fr.zeta ** 2, fr.s)


def test_miyamoto_fixes_a1_a0():
    J = jordan_pair(F(1, 3))
    a = J.basis(0)
    rep = axis_check(J, a)
    for lam in (1, 0):
        for v in rep.eigenspaces[lam].basis:
            assert la.matvec(rep.miyamoto, v) == v


def test_miyamoto_requires_axis():
    J = jordan_pair(F(1, 3))
    with pytest.raises(NotAnAxisError):
        miyamoto(J, J.basis(2))


def test_miyamoto_involution_and_conjugation(s4_matsuo):
    M = s4_matsuo
    taus = [miyamoto(M, M.basis(i)) for i in range(M.dim)]
    for i, ti in enumerate(taus):
        assert la.is_identity(la.matmul(ti, ti))
        assert is_automorphism(M, ti)
        for j, tj in enumerate(taus):
            img = la.matvec(ti, M.basis(j))
            assert axis_check(M, img, with_miyamoto=False).passed
            assert la.mat_equal(la.matmul(la.matmul(ti, tj), ti), miyamoto(M, img))


@pytest.mark.parametrize("alpha", [F(1, 4), F(1, 2), 2, F(-3, 7), 0, 1])
def test_frobenius_jordan_pair(alpha):
    J = jordan_pair(alpha)
    G = frobenius_form(J, axes=[J.basis(0), J.basis(1)]).gram
    assert G == jordan_pair_gram(alpha)


def test_frobenius_universal_entry(universal):
    G = frobenius_form(universal).gram
    al = F(1, 3)
    assert G[3][3] == al * (al + 1) / 2


def test_frobenius_associates(universal):
    G = frobenius_form(universal).gram
    n = universal.dim
    f = lambda x, y: la.dot(x, la.matvec(G, y))
    for i in range(n):
        for j in range(n):
            assert G[i][j] == G[j][i]
            for k in range(n):
                ei, ej, ek = universal.basis(i), universal.basis(j), universal.basis(k)
                assert f(universal.mul(ei, ej), ek) == f(ei, universal.mul(ej, ek))


def test_frobenius_not_unique():
    B = algebra_2b()
    with pytest.raises(FrobeniusError):
        frobenius_form(B, axes=[B.basis(0)])


def test_eigenspaces_orthogonal(universal):
    G = frobenius_form(universal).gram
    f = lambda x, y: la.dot(x, la.matvec(G, y))
    for k in range(3):
        a = universal.basis(k)
        rep = axis_check(universal, a)
        spaces = [rep.eigenspaces[lam] for lam in (1, 0, F(1, 2))]
        for p in range(3):
            for q in range(p + 1, 3):
                assert all(f(u, v) == 0 for u in spaces[p].basis for v in spaces[q].basis)
        # projection onto A_1(a) is (u, a) a
        for i in range(universal.dim):
            u = universal.basis(i)
            rest = la.sub(u, la.scale(f(u, a), a))
            assert (spaces[1] + spaces[2]).contains(rest)


@pytest.mark.parametrize("alpha, value", [(F(1, 4), F(27, 512)), (0, 0), (2, -1)])
def test_gram_determinant(alpha, value):
    assert gram_determinant(jordan_pair_gram(alpha)) == value


def test_radicals(g334):
    J = jordan_pair(F(1, 3))
    assert radical(J).dim == 0
    J1 = jordan_pair(1)
    assert radical(J1) == Subspace([(1, -1, 0), (0, 0, 1)], 3)
    assert radical(g334.algebra).dim == 2


def test_axis_closure_quarter():
    J = jordan_pair(F(1, 4))
    res = axis_closure(J, [J.basis(0), J.basis(1)])
    assert res.closed and res.size == 3
    c = res.axes[2]
    assert c == la.matvec(miyamoto(J, J.basis(1)), J.basis(0))
    assert c == la.matvec(miyamoto(J, J.basis(0)), J.basis(1))
    assert spans_check(J, res.axes)


def test_axis_closure_2b():
    B = algebra_2b()
    res = axis_closure(B, [B.basis(0), B.basis(1)])
    assert res.closed and res.size == 2
    assert not spans_check(B, [B.basis(0)])


def test_axis_closure_infinite():
    J = jordan_pair(1)
    res = axis_closure(J, [J.basis(0), J.basis(1)], cap=50)
    assert not res.closed and len(set(res.axes)) == len(res.axes) > 50


def test_seress(universal, s4_matsuo):
    for k in range(3):
        assert seress_check(universal, universal.basis(k))[0]
    for i in range(s4_matsuo.dim):
        assert seress_check(s4_matsuo, s4_matsuo.basis(i))[0]


def test_projection_graph(s4_matsuo):
    B = algebra_2b()
    g = projection_graph([B.basis(0), B.basis(1)], B.form)
    assert len(g.components) == 2
    M = s4_matsuo
    g = projection_graph([M.basis(i) for i in range(M.dim)], M.form)
    assert g.connected
    J = jordan_pair(F(1, 3))
    assert projection_graph([J.basis(0), J.basis(1)], J.form).connected


def test_report_json_strings():
    J = jordan_pair(F(1, 3))
    rep = axis_check(J, J.basis(0))
    data = rep.to_json()
    assert data["passed"] and data["eigen_dims"] == {"1/1": 1, "0/1": 1, "1/2": 1}
    assert all(isinstance(x, str) for row in data["miyamoto"] for x in row)
