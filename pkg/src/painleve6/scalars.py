"""Exact scalars: rationals and elements of a quadratic field Q(sqrt(m)).

A :class:`FieldScalar` stores ``a + b*sqrt(m)`` with ``a, b`` rational.  The
tag ``m`` travels with the value; ``m == 0`` means a plain rational.  Values
over Q mix freely with values over any Q(sqrt(m)), but two different nonzero
tags never mix.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational


class ScalarError(ArithmeticError):
    pass


class FieldMismatch(ScalarError):
    pass


def join_tags(m1: int, m2: int) -> int:
    if m1 == 0:
        return m2
    if m2 == 0 or m1 == m2:
        return m1
    raise FieldMismatch(f"cannot combine Q(sqrt({m1})) with Q(sqrt({m2}))")


class FieldScalar:
    __slots__ = ("a", "b", "m")

    def __init__(self, a=0, b=0, m: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        if m == 0 and b != 0:
            raise ScalarError("irrational part given without an extension tag")
        if m != 0 and _is_square(m):
            raise ScalarError(f"sqrt({m}) is rational; use a plain rational")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m", int(m))

    def __setattr__(self, name, value):
        raise AttributeError("FieldScalar is immutable")

    # construction helpers -------------------------------------------------
    @classmethod
    def coerce(cls, value) -> "FieldScalar":
        if isinstance(value, FieldScalar):
            return value
        if isinstance(value, (int, Fraction, Rational)):
            return cls(value)
        if isinstance(value, str):
            return parse_scalar(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to FieldScalar")

    @classmethod
    def i(cls) -> "FieldScalar":
        return cls(0, 1, -1)

    # predicates -------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return not self.is_zero()

    # arithmetic -------------------------------------------------------------
    def _binary(self, other):
        try:
            other = FieldScalar.coerce(other)
        except TypeError:
            return None, 0
        return other, join_tags(self.m, other.m)

    def __add__(self, other):
        other, m = self._binary(other)
        if other is None:
            return NotImplemented
        return FieldScalar(self.a + other.a, self.b + other.b, m)

    __radd__ = __add__

    def __neg__(self):
        return FieldScalar(-self.a, -self.b, self.m)

    def __sub__(self, other):
        other, m = self._binary(other)
        if other is None:
            return NotImplemented
        return FieldScalar(self.a - other.a, self.b - other.b, m)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other, m = self._binary(other)
        if other is None:
            return NotImplemented
        a = self.a * other.a + m * self.b * other.b
        b = self.a * other.b + self.b * other.a
        return FieldScalar(a, b, m)

    __rmul__ = __mul__

    def conjugate(self) -> "FieldScalar":
        return FieldScalar(self.a, -self.b, self.m)

    def norm(self) -> Fraction:
        return self.a * self.a - self.m * self.b * self.b

    def inverse(self) -> "FieldScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in FieldScalar")
        return FieldScalar(self.a / n, -self.b / n, self.m)

    def __truediv__(self, other):
        other, m = self._binary(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldScalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = FieldScalar(1, 0, self.m if self.b else 0), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison / hashing ---------------------------------------------------
    def _key(self):
        return (self.a, self.b, self.m if self.b else 0)

    def __eq__(self, other):
        try:
            other = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash(self._key())

    def __repr__(self):
        return f"FieldScalar({self})"

    def __str__(self):
        return format_scalar(self)


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = int(n ** 0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r * r == n


def _frac_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: FieldScalar) -> str:
    """Text form ``p/q`` or ``p/q+r/s*i`` (``*sqrt(m)`` for other tags)."""
    if x.b == 0:
        return _frac_text(x.a)
    unit = "i" if x.m == -1 else f"sqrt({x.m})"
    imag = _frac_text(abs(x.b))
    sign = "-" if x.b < 0 else "+"
    if x.a == 0:
        return f"{'-' if x.b < 0 else ''}{imag}*{unit}"
    return f"{_frac_text(x.a)}{sign}{imag}*{unit}"


_UNIT_RE = re.compile(r"\*?\s*(i|sqrt\((-?\d+)\))\s*$")


def parse_scalar(text: str) -> FieldScalar:
    """Parse the output of :func:`format_scalar`."""
    body = text.strip()
    mt = _UNIT_RE.search(body)
    try:
        if mt is None:
            return FieldScalar(Fraction(body.replace(" ", "")))
        m = -1 if mt.group(1) == "i" else int(mt.group(2))
        rest = body[: mt.start()].replace(" ", "")
        cut = max(rest.rfind("+"), rest.rfind("-"))
        if cut > 0:
            re_part, im_part = rest[:cut], rest[cut:]
        else:
            re_part, im_part = "0", rest
        if im_part in ("", "+", "-"):
            im_part += "1"
        return FieldScalar(Fraction(re_part), Fraction(im_part), m)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad scalar literal {text!r}") from exc


ZERO = FieldScalar(0)
ONE = FieldScalar(1)
I = FieldScalar.i()
