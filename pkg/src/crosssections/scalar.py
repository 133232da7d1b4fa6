"""Exact Gaussian rationals: complex numbers with rational real and imaginary parts.

A value is stored as ``(a + b*i) / d`` with integers ``a, b`` and ``d > 0`` and
``gcd(a, b, d) == 1``.  That keeps every operation at a handful of integer
multiplications plus one gcd, and equality stays structural.  The ``re`` and
``im`` properties hand back reduced :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = [
    "Scalar",
    "ScalarParseError",
    "ZERO",
    "ONE",
    "I",
    "parse_rational",
    "parse_scalar",
    "format_rational",
    "format_scalar",
    "arith",
    "invert",
    "as_scalar",
]


class ScalarParseError(ValueError):
    """Malformed scalar literal; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, text, pos, reason):
        self.text = text
        self.pos = pos
        self.reason = reason
        super().__init__(f"{reason} at position {pos} in {text!r}")


class Scalar:
    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im != 0:
                raise TypeError("cannot combine a Scalar real part with an imaginary part")
            self._a, self._b, self._d = re._a, re._b, re._d
            self._hash = None
            return
        fr = _to_fraction(re)
        fi = _to_fraction(im)
        d = fr.denominator * fi.denominator // gcd(fr.denominator, fi.denominator)
        a = fr.numerator * (d // fr.denominator)
        b = fi.numerator * (d // fi.denominator)
        self._a, self._b, self._d = a, b, d
        self._hash = None

    @classmethod
    def _raw(cls, a, b, d):
        # d != 0 is guaranteed by callers
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        obj = object.__new__(cls)
        obj._a, obj._b, obj._d = a, b, d
        obj._hash = None
        return obj

    # -- components -------------------------------------------------------

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    def __bool__(self):
        return not self.is_zero()

    def conjugate(self) -> Scalar:
        return Scalar._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Squared modulus, exact."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def height(self) -> int:
        """Largest absolute integer in the reduced representation."""
        return max(abs(self._a), abs(self._b), self._d)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return Scalar._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return Scalar._raw(self._a + o._a, self._b + o._b, self._d)
        return Scalar._raw(
            self._a * o._d + o._a * self._d,
            self._b * o._d + o._b * self._d,
            self._d * o._d,
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return Scalar._raw(self._a - o._a, self._b - o._b, self._d)
        return Scalar._raw(
            self._a * o._d - o._a * self._d,
            self._b * o._d - o._b * self._d,
            self._d * o._d,
        )

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, e = self._a, self._b, o._a, o._b
        return Scalar._raw(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        a, b, d = self._a, self._b, self._d
        # d / (a + bi) = d (a - bi) / (a^2 + b^2)
        return Scalar._raw(d * a, -d * b, a * a + b * b)

    # -- comparison, hashing, display ------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        h = self._hash
        if h is None:
            if self._b == 0:
                h = hash(Fraction(self._a, self._d))
            else:
                h = hash((self._a, self._b, self._d))
            self._hash = h
        return h

    def __repr__(self):
        return f"Scalar({format_rational(self.re)}, {format_rational(self.im)})"

    def __str__(self):
        return format_scalar(self)

    def __reduce__(self):
        return (Scalar, (self.re, self.im))


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise TypeError("bool is not a scalar value")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, Rational):
        return Fraction(v.numerator, v.denominator)
    if isinstance(v, str):
        return parse_rational(v)
    raise TypeError(f"cannot build an exact rational from {type(v).__name__}")


def _coerce(v):
    if isinstance(v, Scalar):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return Scalar._raw(v, 0, 1)
    if isinstance(v, Fraction):
        return Scalar._raw(v.numerator, 0, v.denominator)
    return None


def as_scalar(v) -> Scalar:
    """Coerce ints, Fractions, rational strings and scalar literals to a Scalar."""
    if isinstance(v, Scalar):
        return v
    if isinstance(v, str) and v.lstrip().startswith("("):
        return parse_scalar(v.strip())
    return Scalar(v)


ZERO = Scalar._raw(0, 0, 1)
ONE = Scalar._raw(1, 0, 1)
I = Scalar._raw(0, 1, 1)


# -- text grammar -------------------------------------------------------------

_RATIONAL = _re.compile(r"-?[0-9]+(?:/[0-9]+)?")


def _match_rational(text, pos):
    m = _RATIONAL.match(text, pos)
    if m is None:
        raise ScalarParseError(text, pos, "expected a rational literal")
    lit = m.group(0)
    num, _, den = lit.partition("/")
    if den:
        if int(den) == 0:
            raise ScalarParseError(text, pos + len(num) + 1, "zero denominator")
        value = Fraction(int(num), int(den))
    else:
        value = Fraction(int(num))
    return value, m.end()


def parse_rational(text: str) -> Fraction:
    """Parse ``-?digits(/digits)?``."""
    value, end = _match_rational(text, 0)
    if end != len(text):
        raise ScalarParseError(text, end, "unexpected trailing characters")
    return value


def parse_scalar(text: str) -> Scalar:
    """Parse ``(<rational>,<rational>)`` into a Scalar.

    >>> parse_scalar("(-3,2/5)")
    Scalar(-3, 2/5)
    """
    if not text.startswith("("):
        raise ScalarParseError(text, 0, "expected '('")
    re_part, pos = _match_rational(text, 1)
    if pos >= len(text) or text[pos] != ",":
        raise ScalarParseError(text, pos, "expected ','")
    im_part, pos = _match_rational(text, pos + 1)
    if pos >= len(text) or text[pos] != ")":
        raise ScalarParseError(text, pos, "expected ')'")
    if pos + 1 != len(text):
        raise ScalarParseError(text, pos + 1, "unexpected trailing characters")
    return Scalar(re_part, im_part)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(s: Scalar) -> str:
    return f"({format_rational(s.re)},{format_rational(s.im)})"


def arith(a: Scalar, b: Scalar, kind: str) -> Scalar:
    """Apply ``kind`` in {"add", "sub", "mul", "div"}; division by zero raises."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def invert(a: Scalar) -> Scalar:
    return a.inverse()
