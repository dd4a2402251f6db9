from fractions import Fraction as F

import pytest

from axial import linalg as la
from axial.algebra import Algebra
from axial.catalog import jordan_pair, nilpotent_frame
from axial.solidity import (family_axis_census, grading_automorphism, grading_closed,
                            idempotent_variety_2gen, line_subalgebra, recognize_matsuo,
                            rho_decomposition, solidity_census, solidity_check, transcribed_st,
                            universal_w_basis, w_operator_matrices, xi_samples)


def _line_of(ex, kind):
    L = getattr(ex.split, kind)[0]
    return [ex.algebra.basis(i) for i in L]


def _commuting_pair(FS):
    return next((i, j) for (i, j), k in FS.third.items() if k is None and i < j)


# -- lines -----------------------------------------------------------------------

def test_line_subalgebra_collinear(g334):
    a, b, _ = _line_of(g334, "vertical")
    line = line_subalgebra(g334.algebra, a, b)
    assert line.dim == 3 and line.alpha == F(1, 4) and line.one is not None


def test_line_subalgebra_commuting(g334):
    i, j = _commuting_pair(g334.space)
    M = g334.algebra
    line = line_subalgebra(M, M.basis(i), M.basis(j))
    assert line.dim == 2 and line.alpha == 0


def test_line_subalgebra_equal(s4_matsuo):
    a = s4_matsuo.basis(0)
    assert line_subalgebra(s4_matsuo, a, a).dim == 1


def test_a_prime_form_value(s4_matsuo, g334):
    for M, (a, b) in ((s4_matsuo, (s4_matsuo.basis(0), s4_matsuo.basis(1))),
                      (g334.algebra, _line_of(g334, "horizontal")[:2])):
        line = line_subalgebra(M, a, b)
        assert line.alpha == F(1, 4)
        assert M.bilinear(la.sub(line.one, a), b) == F(3, 4)


# -- classification ------------------------------------------------------------------

def test_vertical_solid(g334):
    a, b, _ = _line_of(g334, "vertical")
    res = solidity_check(g334.algebra, a, b)
    assert (res.kind, res.method) == ("solid", "a-prime")


def test_horizontal_non_solid(g334):
    a, b, _ = _line_of(g334, "horizontal")
    res = solidity_check(g334.algebra, a, b)
    assert (res.kind, res.method) == ("non-solid", "a-prime")
    assert res.witnesses and res.witnesses[0]["fusion_violations"] > 0


@pytest.mark.parametrize("kind", ["vertical", "horizontal"])
def test_a_prime_agrees_with_sampling(g334, kind):
    a, b, c = _line_of(g334, kind)
    res = solidity_check(g334.algebra, a, b, quarter_sampling=True)
    assert len(res.samples) == 12
    passing = [xi for xi, r in res.samples if r.passed]
    if kind == "vertical":
        assert len(passing) == 12
    else:
        assert len(passing) == 3
        fr = nilpotent_frame(g334.algebra, a, b)
        assert set(passing) == {1 / fr.nu, 1 / fr.mu, fr.c_parameter}
        assert fr.member(fr.c_parameter) == c


def test_theorem_route(universal):
    res = solidity_check(universal, universal.basis(0), universal.basis(1))
    assert (res.kind, res.method) == ("solid", "theorem")
    assert len(res.samples) == 12 and all(r.passed for _, r in res.samples)


def test_trivially_solid(g334):
    i, j = _commuting_pair(g334.space)
    M = g334.algebra
    assert solidity_check(M, M.basis(i), M.basis(j)).kind == "trivially-solid-2B"


def test_degenerate_inputs(universal):
    a = universal.basis(0)
    assert solidity_check(universal, a, a).kind == "degenerate"
    res = solidity_check(universal, a, universal.basis(3))
    assert res.kind == "degenerate" and res.witnesses


@pytest.mark.parametrize("alpha", [0, 1])
def test_characteristic_zero_route(alpha):
    J = jordan_pair(alpha)
    res = solidity_check(J, J.basis(0), J.basis(1), samples=8)
    assert res.kind == "solid"
    assert res.method == "theorem (char 0) + sampled evidence"
    assert len(res.samples) == 8 and all(r.passed for _, r in res.samples)


def test_census_orbits(g334):
    records = solidity_census(g334.algebra)
    summary = sorted((r.orbit_size, r.classification.kind) for r in records)
    assert summary == [(18, "solid"), (27, "trivially-solid-2B"), (108, "non-solid")]


# -- family --------------------------------------------------------------------------

def test_xi_samples_distinct():
    J = jordan_pair(F(1, 4))
    fr = nilpotent_frame(J, J.basis(0), J.basis(1))
    xs = xi_samples(fr, 12)
    assert len(xs) == len(set(xs)) == 12 and all(xs)
    assert xs[:3] == [1 / fr.nu, 1 / fr.mu, fr.c_parameter]
    assert len(xi_samples(fr, 30)) == 30


def test_family_census_quarter_in_jordan_pair():
    J = jordan_pair(F(1, 4))
    fr = nilpotent_frame(J, J.basis(0), J.basis(1))
    census = family_axis_census(fr.algebra, fr, xi_samples(fr))
    assert all(r.passed for _, r in census)
    assert fr.c_parameter == 4


def test_family_census_quarter_in_universal():
    # the universal algebra is Jordan, so the line is solid: every sample passes
    from axial.catalog import three_gen_universal
    T = three_gen_universal(F(1, 4), F(1, 5), F(1, 7), F(1, 11))
    fr = nilpotent_frame(T, T.basis(0), T.basis(1))
    assert fr.algebra.radicand == -3
    census = family_axis_census(fr.algebra, fr, xi_samples(fr))
    assert [r.passed for _, r in census] == [True] * 12


# -- grading ---------------------------------------------------------------------------

@pytest.fixture(scope="module")
def decomposition(universal):
    return rho_decomposition(universal, universal.basis(0), universal.basis(1))


def test_rho_decomposition(decomposition):
    assert decomposition.dims == (1, 2, 3, 2, 1)
    assert decomposition.passed, decomposition.checks


def test_rho_form_values(decomposition):
    B, fr = decomposition.algebra, decomposition.frame
    assert B.bilinear(fr.s, fr.s) == 0 == B.bilinear(fr.t, fr.t)
    assert B.bilinear(fr.s, fr.t) == F(1, 4)


def test_rho_parts_orthogonal(decomposition):
    B = decomposition.algebra
    parts = decomposition.parts
    for n in range(-2, 3):
        for m in range(-2, 3):
            if n + m == 0:
                continue
            assert all(B.bilinear(u, v) == 0 for u in parts[n].basis for v in parts[m].basis)


def test_grading_closed(decomposition):
    closed = grading_closed(decomposition)
    assert len(closed) == 15 and all(closed.values())


def test_w_matrices(decomposition):
    S, T = w_operator_matrices(decomposition, universal_w_basis(decomposition))
    assert (S, T) == tuple(transcribed_st(decomposition.frame))
    assert la.rank(S) == la.rank(T) == 2
    assert la.matmul(S, S) == [[0] * 6 for _ in range(6)] == la.matmul(T, T)


def test_st_block_determinant(decomposition):
    S, T = w_operator_matrices(decomposition, universal_w_basis(decomposition))
    ST = la.matmul(S, T)
    al = decomposition.frame.alpha
    assert la.det([row[1:3] for row in ST[1:3]]) == -1 / (2 ** 10 * (al - 1))


def test_grading_automorphisms(decomposition):
    fr = decomposition.frame
    phi = {x: grading_automorphism(decomposition, x) for x in (F(2), F(3), F(-1), F(6))}
    assert la.mat_equal(la.matmul(phi[F(2)], phi[F(3)]), phi[F(6)])
    assert la.is_identity(grading_automorphism(decomposition, 1))
    for d in (F(1), F(-2), 1 / fr.nu):
        for x in (F(2), F(-1)):
            assert la.matvec(phi[x], fr.member(d)) == fr.member(d / x ** 2)
    with pytest.raises(ValueError):
        grading_automorphism(decomposition, 0)


def test_transitivity(decomposition):
    # xi with xi^2 = delta/epsilon carries u(delta) to u(epsilon)
    fr = decomposition.frame
    delta, eps = F(8), F(2)
    phi = grading_automorphism(decomposition, F(2))
    assert la.matvec(phi, fr.member(delta)) == fr.member(eps)


def test_rho_rejects_quarter():
    J = jordan_pair(F(1, 4))
    with pytest.raises(ValueError):
        rho_decomposition(J, J.basis(0), J.basis(1))


# -- idempotent varieties ------------------------------------------------------------

def test_variety_j0():
    V = idempotent_variety_2gen(jordan_pair(0), 0)
    first, second = V.components
    assert V.verified
    assert first.contains((1, 0, 0)) and not second.contains((1, 0, 0))
    assert second.contains((0, 1, 0)) and not first.contains((0, 1, 0))


def test_variety_j1():
    J = jordan_pair(1)
    V = idempotent_variety_2gen(J, 1)
    (line,) = V.components
    assert V.verified and line.contains((1, 0, 0))
    half = (F(1, 2),) * 3
    assert line.contains(half) and J.square(half) == half


def test_variety_generic():
    V = idempotent_variety_2gen(jordan_pair(F(9, 8)), F(9, 8))
    assert V.verified and len(V.components) == 2


# -- recognition -----------------------------------------------------------------------

def test_recognize_s4(s4_matsuo):
    rec = recognize_matsuo(s4_matsuo)
    assert rec.applicable and rec.homomorphism and rec.surjective and rec.kernel_dim == 0
    assert rec.orders_ok and set(rec.orders.values()) == {2, 3}


def test_recognize_not_applicable():
    J = jordan_pair(F(1, 3))
    rec = recognize_matsuo(J)
    assert not rec.applicable and "1/3" in rec.reason


def test_recognize_single_axis():
    A = Algebra(1, {(0, 0): (1,)}, axes=[(1,)], form=[[1]])
    assert not recognize_matsuo(A).applicable


def test_recognize_quotient(g334):
    rec = recognize_matsuo(g334.quotient)
    assert rec.applicable and rec.homomorphism and rec.surjective
    assert g334.quotient.dim == 16 and rec.orders_ok
