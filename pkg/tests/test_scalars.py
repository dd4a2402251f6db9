from fractions import Fraction as F

import pytest

from axial.scalars import (DegenerateRootError, MixedRadicandError, QuadExt, ScalarParseError,
                           format_scalar, normalize_radicand, parse_scalar,
                           solve_unit_quadratic)


def test_normalize_square():
    r = normalize_radicand(F(9, 64))
    assert r.square and r.d == 1 and r.s == F(3, 8)


def test_normalize_negative():
    r = normalize_radicand(F(-3, 16))
    assert (r.d, r.s, r.square) == (-3, F(1, 4), False)


def test_normalize_unit():
    r = normalize_radicand(1)
    assert r.square and r.s == 1


def test_normalize_zero():
    with pytest.raises(ValueError, match="zero radicand"):
        normalize_radicand(0)


def test_roots_rational():
    assert solve_unit_quadratic(F(9, 8)) == (2, F(1, 2))


def test_roots_cube_root_of_unity():
    z, zi = solve_unit_quadratic(F(1, 4))
    assert z == QuadExt(F(-1, 2), F(1, 2), -3)
    assert z ** 3 == 1 and z != 1
    assert zi == z * z


@pytest.mark.parametrize("alpha", [0, 1])
def test_roots_degenerate(alpha):
    with pytest.raises(DegenerateRootError):
        solve_unit_quadratic(alpha)


def test_roots_wrong_context():
    with pytest.raises(MixedRadicandError):
        solve_unit_quadratic(F(1, 4), radicand=2)


def test_norm_identity():
    r2 = QuadExt.sqrt(2)
    assert (1 + r2) * (1 - r2) == -1


def test_inverse_formula():
    x = QuadExt(3, 5, 7)
    assert x.inverse() == QuadExt(F(3, 9 - 175), F(-5, 9 - 175), 7)
    assert x * x.inverse() == 1


def test_invert_zero():
    with pytest.raises(ZeroDivisionError):
        QuadExt(0, 0, 2).inverse()
    with pytest.raises(ZeroDivisionError):
        1 / (QuadExt.sqrt(2) - QuadExt.sqrt(2))


def test_mu_nu_product():
    assert F(-3, 4) * F(-3, 8) == F(9, 32)


def test_mixed_radicand():
    with pytest.raises(MixedRadicandError):
        QuadExt.sqrt(2) + QuadExt.sqrt(3)


def test_bad_radicand():
    with pytest.raises(ValueError):
        QuadExt(1, 1, 4)


@pytest.mark.parametrize("x, text", [
    (F(0), "0/1"),
    (F(-3, 4), "-3/4"),
    (QuadExt(F(-1, 2), F(1, 2), -3), "-1/2+1/2*sqrt(-3)"),
    (QuadExt(1, -2, 5), "1/1+-2/1*sqrt(5)"),
])
def test_format(x, text):
    assert format_scalar(x) == text
    assert parse_scalar(text) == x


@pytest.mark.parametrize("text, value", [
    ("7", F(7)),
    ("1/2-sqrt(2)", QuadExt(F(1, 2), -1, 2)),
    ("sqrt(-1)", QuadExt(0, 1, -1)),
    ("2/3*sqrt(6)", QuadExt(0, F(2, 3), 6)),
    ("1+0*sqrt(2)", F(1)),
])
def test_parse_lenient(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text, position", [
    ("1/0", 2),
    ("1/3x", 3),
    ("", 0),
    ("1+2*sqrt(4)", 11),
    ("1 /2", 1),
])
def test_parse_errors(text, position):
    with pytest.raises(ScalarParseError) as err:
        parse_scalar(text)
    assert err.value.position == position
