"""Exact scalars: rationals and elements of a quadratic field Q(sqrt(d)).

Rationals are plain :class:`fractions.Fraction` values.  Elements of a
quadratic extension are :class:`QuadExt` instances; they interoperate with
``int`` and ``Fraction`` operands, while mixing two different radicands is an
error rather than an implicit compositum.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Union

__all__ = [
    "QuadExt",
    "Scalar",
    "MixedRadicandError",
    "DegenerateRootError",
    "ScalarParseError",
    "RadicandSplit",
    "normalize_radicand",
    "is_squarefree",
    "solve_unit_quadratic",
    "as_scalar",
    "radicand_of",
    "common_radicand",
    "parse_scalar",
    "format_scalar",
    "sort_key",
]


class MixedRadicandError(ValueError):
    """Raised when two elements of different quadratic fields meet."""


class DegenerateRootError(ValueError):
    """x^2 - (4a-2)x + 1 has a double root (a in {0, 1})."""


class ScalarParseError(ValueError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position} in {text!r}")


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    from sympy import factorint

    return all(e == 1 for p, e in factorint(abs(n)).items())


class QuadExt:
    """The element ``a + b*sqrt(d)`` of Q(sqrt(d)).

    ``d`` must be a squarefree integer different from 0 and 1, so that the
    extension is a field and equal fields have equal radicands.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        d = int(d)
        if d in (0, 1) or not is_squarefree(d):
            raise ValueError(f"radicand {d} is not a squarefree integer other than 0, 1")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> "QuadExt":
        obj = object.__new__(cls)
        obj.a = a
        obj.b = b
        obj.d = d
        return obj

    @classmethod
    def sqrt(cls, d: int) -> "QuadExt":
        return cls(0, 1, d)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise MixedRadicandError(f"cannot combine sqrt({self.d}) with sqrt({other.d})")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadExt._raw(self.a + c[0], self.b + c[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadExt._raw(self.a - c[0], self.b - c[1], self.d)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadExt._raw(c[0] - self.a, c[1] - self.b, self.d)

    def __neg__(self):
        return QuadExt._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        x, y = c
        if y == 0:
            return QuadExt._raw(self.a * x, self.b * x, self.d)
        return QuadExt._raw(self.a * x + self.d * self.b * y, self.a * y + self.b * x, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def conjugate(self) -> "QuadExt":
        return QuadExt._raw(self.a, -self.b, self.d)

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(%d))" % self.d)
        return QuadExt._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadExt._raw(self.a / other, self.b / other, self.d)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadExt._raw(Fraction(1), Fraction(0), self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, QuadExt]


class RadicandSplit(NamedTuple):
    """``r = s**2 * d`` with ``d`` squarefree and ``s > 0``."""

    d: int
    s: Fraction
    square: bool


def normalize_radicand(r) -> RadicandSplit:
    """Write a nonzero rational as ``s**2 * d`` with ``d`` a squarefree integer.

    >>> normalize_radicand(Fraction(-3, 16))
    RadicandSplit(d=-3, s=Fraction(1, 4), square=False)
    """
    r = Fraction(r)
    if r == 0:
        raise ValueError("zero radicand")
    from sympy import factorint

    # p/q = p*q / q**2, so only the integer p*q needs splitting
    m = r.numerator * r.denominator
    f = 1
    d = -1 if m < 0 else 1
    for p, e in factorint(abs(m)).items():
        f *= p ** (e // 2)
        if e % 2:
            d *= p
    s = Fraction(f, r.denominator)
    return RadicandSplit(d, s, d == 1)


def solve_unit_quadratic(alpha, radicand: int | None = None):
    """Roots ``(zeta, 1/zeta)`` of ``x**2 - (4*alpha - 2)*x + 1``.

    The convention is ``zeta = 2*alpha - 1 + 2*sqrt(alpha*(alpha - 1))`` with
    the positive normalized square-root coefficient.  When ``radicand`` is
    given the roots must live in that field (or in Q).
    """
    alpha = Fraction(alpha)
    if alpha in (0, 1):
        raise DegenerateRootError(f"alpha={alpha} gives the double root {2 * alpha - 1}")
    split = normalize_radicand(alpha * (alpha - 1))
    centre = 2 * alpha - 1
    if split.square:
        zeta = centre + 2 * split.s
        return zeta, 1 / zeta
    if radicand is not None and radicand != split.d:
        raise MixedRadicandError(
            f"roots for alpha={alpha} need sqrt({split.d}), context has sqrt({radicand})"
        )
    zeta = QuadExt._raw(centre, 2 * split.s, split.d)
    return zeta, zeta.inverse()


def as_scalar(x) -> Scalar:
    if isinstance(x, QuadExt):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted as exact scalars")
    return Fraction(x)


def radicand_of(x) -> int | None:
    if isinstance(x, QuadExt) and x.b != 0:
        return x.d
    return None


def common_radicand(values, start: int | None = None) -> int | None:
    """The single radicand shared by ``values``; raises on a mix."""
    d = start
    for x in values:
        e = radicand_of(x)
        if e is None:
            continue
        if d is None:
            d = e
        elif d != e:
            raise MixedRadicandError(f"values live in sqrt({d}) and sqrt({e})")
    return d


def sort_key(x):
    if isinstance(x, QuadExt):
        return (x.a, x.b)
    return (Fraction(x), Fraction(0))


def _fmt_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """``"p/q"`` for rationals, ``"p/q+r/s*sqrt(d)"`` for extension elements."""
    if isinstance(x, QuadExt):
        if x.b == 0:
            return _fmt_rational(x.a)
        return f"{_fmt_rational(x.a)}+{_fmt_rational(x.b)}*sqrt({x.d})"
    return _fmt_rational(Fraction(x))


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, reason: str):
        raise ScalarParseError(self.text, self.pos, reason)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self, signed=True) -> int:
        start = self.pos
        if signed and self.peek() and self.peek() in "+-":
            self.pos += 1
        digits = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = digits
            self.fail("expected digits")
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        p = self.integer()
        if self.peek() == "/":
            self.pos += 1
            at = self.pos
            q = self.integer(signed=False)
            if q == 0:
                self.pos = at
                self.fail("zero denominator")
            return Fraction(p, q)
        return Fraction(p)

    def expect(self, token: str):
        if not self.text.startswith(token, self.pos):
            self.fail(f"expected {token!r}")
        self.pos += len(token)


def parse_scalar(text: str) -> Scalar:
    """Inverse of :func:`format_scalar`; also accepts ``"p"`` and a ``-`` before the surd."""
    r = _Reader(text)
    if text.startswith("sqrt(") or text.startswith("-sqrt("):
        a = Fraction(0)
        sign = 1
    else:
        a = r.rational()
        if r.peek() == "":
            return a
        if r.peek() == "*":
            # "r/s*sqrt(d)" with no rational part
            b_only = a
            r.expect("*sqrt(")
            d = r.integer()
            r.expect(")")
            if r.peek():
                r.fail("trailing characters")
            return _build(Fraction(0), b_only, d, r)
        if r.peek() not in "+-":
            r.fail("expected '+' or '-'")
        sign = 1 if r.peek() == "+" else -1
        r.pos += 1
    if r.text.startswith("sqrt(", r.pos):
        b = Fraction(1)
    elif r.text.startswith("-sqrt(", r.pos):
        b = Fraction(-1)
        r.pos += 1
    else:
        b = r.rational()
        r.expect("*")
    r.expect("sqrt(")
    d = r.integer()
    r.expect(")")
    if r.peek():
        r.fail("trailing characters")
    return _build(a, sign * b, d, r)


def _build(a, b, d, reader: _Reader):
    if d == 1 or d == 0 or not is_squarefree(d):
        reader.fail(f"radicand {d} is not squarefree or is trivial")
    if b == 0:
        return a
    return QuadExt._raw(a, b, d)
