from fractions import Fraction as F

import pytest

from axial import linalg as la
from axial.algebra import quotient, subalgebra_closure
from axial.algebra import jordan_identity_check
from axial.axes import FrobeniusError, axis_check, frobenius_form
from axial.catalog import (DegenerateAlphaError, FieldExtensionError, UNIVERSAL_LABELS,
                           algebra_2b, baric_pair, jordan_pair, nilpotent_frame, spin_factor,
                           spin_idempotent, table2_gram, three_gen_hom, three_gen_universal,
                           two_gen_hom)
from axial.scalars import QuadExt


def test_jordan_pair_sigma_square():
    J = jordan_pair(2)
    s = J.basis(2)
    assert J.mul(s, s) == la.scale(F(1, 2), s)


def test_jordan_pair_a_sigma():
    al = F(3, 5)
    J = jordan_pair(al)
    assert J.mul(J.basis(0), J.basis(2)) == la.scale((al - 1) / 2, J.basis(0))


def test_spin_idempotent_is_primitive():
    S = spin_factor([[1, 0], [0, 3]])
    a = spin_idempotent((1, 0))
    assert axis_check(S, a).passed
    assert S.bilinear(a, a) == 1


@pytest.mark.parametrize("delta", [F(-1, 2), 0, F(1, 3), 2])
def test_spin_pointed_isomorphism(delta):
    S = spin_factor([[1, delta], [delta, 1]])
    a, b = spin_idempotent((1, 0)), spin_idempotent((0, 1))
    hom = two_gen_hom(S, a, b)
    assert hom.params == ((1 + delta) / 2,)
    assert hom.kernel_dim == 0 and hom.image.dim == 3


def test_spin_delta_one():
    S = spin_factor([[1, 1], [1, 1]])
    a, b = spin_idempotent((1, 0)), spin_idempotent((0, 1))
    assert subalgebra_closure(S, [a, b]).dim == 2


def test_spin_rejects_asymmetric():
    with pytest.raises(ValueError):
        spin_factor([[1, 2], [3, 1]])


def test_universal_labels(universal):
    assert tuple(universal.labels) == UNIVERSAL_LABELS
    assert universal.dim == 9


def test_universal_ab_square(universal):
    al = F(1, 3)
    ab = universal.element(ab=1)
    expected = la.scale(al / 4, universal.element(a=1, b=1, ab=2))
    assert universal.mul(ab, ab) == expected


def test_universal_axes(universal):
    for k in range(3):
        assert axis_check(universal, universal.basis(k)).passed


def test_universal_form_matches_corrected_table(universal):
    params = (F(1, 3), F(1, 5), F(1, 7), F(1, 11))
    G = frobenius_form(universal).gram
    assert G == table2_gram(*params)
    assert universal.form == G


def test_literal_table_entry_differs():
    params = (F(1, 3), F(1, 5), F(1, 7), F(1, 11))
    lit, fixed = table2_gram(*params, literal=True), table2_gram(*params)
    diff = [(i, j) for i in range(9) for j in range(9) if lit[i][j] != fixed[i][j]]
    # only the three (u(vw), u(vw)) diagonal entries are affected
    assert diff and all(i == j and i >= 6 for i, j in diff)


def test_literal_product_table_has_no_form():
    # the printed u-coefficient of (uv)(u(vw)) admits no Frobenius form and breaks Jordan
    T = three_gen_universal(F(1, 3), F(1, 5), F(1, 7), F(1, 11), literal=True)
    with pytest.raises(FrobeniusError):
        frobenius_form(T)
    assert not jordan_identity_check(T).passed


def test_frame_rational():
    J = jordan_pair(F(9, 8))
    fr = nilpotent_frame(J, J.basis(0), J.basis(1))
    assert (fr.zeta, fr.mu, fr.nu) == (2, F(-3, 4), F(-3, 8))
    assert fr.mu + fr.nu == -fr.alpha and fr.mu * fr.nu == F(9, 32)


def test_frame_identities_extension():
    J = jordan_pair(2)
    fr = nilpotent_frame(J, J.basis(0), J.basis(1))
    B = fr.algebra
    assert isinstance(fr.zeta, QuadExt) and B.radicand == 2
    assert B.bilinear(fr.d, fr.e) == 2
    assert B.bilinear(fr.s, fr.t) == F(1, 4)
    assert B.square(fr.s) == la.zeros(3) == B.square(fr.t)
    assert B.mul(fr.s, fr.t) == la.scale(F(1, 8), fr.one)
    assert fr.mu ** 2 == fr.alpha * fr.zeta / 4
    assert fr.nu ** 2 == fr.alpha / fr.zeta / 4
    assert fr.member(1 / fr.nu) == fr.a and fr.member(1 / fr.mu) == fr.b


def test_frame_degenerate():
    for al in (0, 1):
        J = jordan_pair(al)
        with pytest.raises(DegenerateAlphaError):
            nilpotent_frame(J, J.basis(0), J.basis(1))


def test_frame_forbidden_extension():
    J = jordan_pair(F(1, 3))
    with pytest.raises(FieldExtensionError):
        nilpotent_frame(J, J.basis(0), J.basis(1), allow_extension=False)


def test_family_member_zero():
    J = jordan_pair(F(9, 8))
    fr = nilpotent_frame(J, J.basis(0), J.basis(1))
    with pytest.raises(ValueError):
        fr.member(0)


def test_two_gen_hom_kernels():
    J = jordan_pair(F(1, 3))
    assert two_gen_hom(J, J.basis(0), J.basis(1)).kernel_dim == 0
    B = algebra_2b()
    assert two_gen_hom(B, B.basis(0), B.basis(1)).kernel_dim == 1
    Z = baric_pair()
    assert two_gen_hom(Z, Z.basis(0), Z.basis(1)).kernel_dim == 1


def test_quotient_matches_2b():
    J0 = jordan_pair(0)
    from axial.algebra import ideal_closure
    Q, q = quotient(J0, ideal_closure(J0, [(F(1, 2), F(1, 2), 1)]))
    hom = two_gen_hom(Q, q.project(J0.basis(0)), q.project(J0.basis(1)))
    assert hom.kernel_dim == 1


def test_three_gen_hom_identity(universal):
    hom = three_gen_hom(universal, *(universal.basis(k) for k in range(3)))
    assert hom.kernel_dim == 0


def test_three_gen_hom_line(s4_matsuo):
    M = s4_matsuo
    idx = [M.labels.index(x) for x in ("(1 2)", "(1 3)", "(2 3)")]
    hom = three_gen_hom(M, *(M.basis(i) for i in idx))
    assert hom.image.dim == 3


def test_three_gen_hom_noncollinear(s4_matsuo):
    M = s4_matsuo
    idx = [M.labels.index(x) for x in ("(1 2)", "(1 3)", "(1 4)")]
    hom = three_gen_hom(M, *(M.basis(i) for i in idx))
    assert hom.image.dim <= 9
