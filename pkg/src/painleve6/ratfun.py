"""Reduced rational functions in one parameter over Q or Q(sqrt(m)).

Normal form: ``(a + b*sqrt(m)) / d`` with ``a, b, d`` in Q[s], ``d`` monic and
``gcd(a, b, d) = 1``.  Keeping the denominator real means every reduction is
a gcd over Q, and the representation is canonical: two equal functions have
identical ``(a, b, d)``.
"""

from __future__ import annotations

from fractions import Fraction

from flint import fmpq, fmpq_poly

from .scalars import FieldScalar, join_tags

_ZERO = fmpq_poly(0)
_ONE = fmpq_poly(1)


def as_fmpq(q) -> fmpq:
    if isinstance(q, fmpq):
        return q
    q = Fraction(q)
    return fmpq(q.numerator, q.denominator)


def to_fraction(q: fmpq) -> Fraction:
    return Fraction(int(q.p), int(q.q))


def monic(p: fmpq_poly) -> fmpq_poly:
    lc = p.leading_coefficient()
    return p if lc == 1 else p / lc


def _gcd3(a: fmpq_poly, b: fmpq_poly, d: fmpq_poly) -> fmpq_poly:
    g = d.gcd(a) if a else d
    if b and g.degree() > 0:
        g = g.gcd(b)
    return g


class RatFun:
    __slots__ = ("a", "b", "d", "m")

    def __init__(self, a, b=None, d=None, m: int = 0, *, reduced: bool = False):
        a = a if isinstance(a, fmpq_poly) else fmpq_poly(a)
        b = _ZERO if b is None else (b if isinstance(b, fmpq_poly) else fmpq_poly(b))
        d = _ONE if d is None else (d if isinstance(d, fmpq_poly) else fmpq_poly(d))
        if m == 0 and b:
            raise ValueError("irrational part without an extension tag")
        if not reduced:
            if not d:
                raise ZeroDivisionError("zero denominator")
            if not a and not b:
                d = _ONE
            else:
                g = _gcd3(a, b, d)
                if g.degree() > 0:
                    a, d = a / g, d / g
                    if b:
                        b = b / g
                lc = d.leading_coefficient()
                if lc != 1:
                    a, d = a / lc, d / lc
                    if b:
                        b = b / lc
        self.a, self.b, self.d, self.m = a, b, d, (m if b else 0)

    # construction -----------------------------------------------------------
    @classmethod
    def const(cls, c) -> "RatFun":
        c = FieldScalar.coerce(c)
        if c.b:
            return cls(fmpq_poly([as_fmpq(c.a)]), fmpq_poly([as_fmpq(c.b)]), _ONE, c.m, reduced=True)
        return cls(fmpq_poly([as_fmpq(c.a)]) if c.a else _ZERO, None, _ONE, 0, reduced=True)

    @classmethod
    def gen(cls) -> "RatFun":
        return cls(fmpq_poly([0, 1]), None, _ONE, 0, reduced=True)

    @classmethod
    def poly(cls, a: fmpq_poly, b: fmpq_poly | None = None, m: int = 0) -> "RatFun":
        return cls(a, b, _ONE, m if b else 0, reduced=True)

    # predicates -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.a and not self.b

    def __bool__(self):
        return not self.is_zero()

    def is_poly(self) -> bool:
        return self.d.degree() == 0

    def is_constant(self) -> bool:
        return self.d.degree() == 0 and self.a.degree() <= 0 and self.b.degree() <= 0

    def is_real(self) -> bool:
        return not self.b

    def constant_value(self) -> FieldScalar:
        if not self.is_constant():
            raise ValueError("not a constant")
        a = to_fraction(self.a[0]) if self.a else Fraction(0)
        if self.b:
            return FieldScalar(a, to_fraction(self.b[0]), self.m)
        return FieldScalar(a)

    @property
    def tag(self) -> int:
        return self.m if self.b else 0

    # arithmetic -------------------------------------------------------------
    def __neg__(self):
        return RatFun(-self.a, -self.b if self.b else _ZERO, self.d, self.m, reduced=True)

    def __add__(self, other):
        if not isinstance(other, RatFun):
            try:
                other = RatFun.const(other)
            except TypeError:
                return NotImplemented
        if not other:
            return self
        if not self:
            return other
        m = join_tags(self.tag, other.tag)
        d1, d2 = self.d, other.d
        if d1 == d2:
            a = self.a + other.a
            b = self.b + other.b
            if d1.degree() == 0:
                return RatFun(a, b, _ONE, m, reduced=True)
            g = _gcd3(a, b, d1)
            if g.degree() > 0:
                return RatFun(a / g, b / g if b else _ZERO, d1 / g, m, reduced=False)
            return RatFun(a, b, d1, m, reduced=True)
        g = d1.gcd(d2)
        if g.degree() == 0:
            a = self.a * d2 + other.a * d1
            b = self.b * d2 + other.b * d1 if (self.b or other.b) else _ZERO
            return RatFun(a, b, d1 * d2, m, reduced=True)
        e1, e2 = d1 / g, d2 / g
        a = self.a * e2 + other.a * e1
        b = self.b * e2 + other.b * e1 if (self.b or other.b) else _ZERO
        h = _gcd3(a, b, g)
        if h.degree() > 0:
            a = a / h
            if b:
                b = b / h
            return RatFun(a, b, e1 * (d2 / h), m, reduced=False)
        return RatFun(a, b, e1 * d2, m, reduced=True)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, RatFun):
            try:
                other = RatFun.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFun):
            try:
                c = FieldScalar.coerce(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        if not self or not other:
            return RatFun(_ZERO)
        m = join_tags(self.tag, other.tag)
        if not self.b and not other.b:
            a1, d1, a2, d2 = self.a, self.d, other.a, other.d
            if d2.degree() > 0:
                g = a1.gcd(d2)
                if g.degree() > 0:
                    a1, d2 = a1 / g, d2 / g
            if d1.degree() > 0:
                g = a2.gcd(d1)
                if g.degree() > 0:
                    a2, d1 = a2 / g, d1 / g
            return _mk_real(a1 * a2, d1 * d2)
        a = self.a * other.a + m * (self.b * other.b)
        b = self.a * other.b + self.b * other.a
        return RatFun(a, b, self.d * other.d, m)

    __rmul__ = __mul__

    def scale(self, c) -> "RatFun":
        c = FieldScalar.coerce(c)
        if c.is_zero():
            return RatFun(_ZERO)
        if not c.b:
            q = as_fmpq(c.a)
            return RatFun(self.a * q, self.b * q if self.b else _ZERO, self.d, self.m, reduced=True)
        m = join_tags(self.tag, c.m)
        ca, cb = as_fmpq(c.a), as_fmpq(c.b)
        a = self.a * ca + (self.b * cb) * m
        b = self.a * cb + self.b * ca
        return RatFun(a, b, self.d, m, reduced=True)

    def inverse(self) -> "RatFun":
        if not self:
            raise ZeroDivisionError("inverse of zero rational function")
        if not self.b:
            lc = self.a.leading_coefficient()
            return RatFun(self.d / lc, _ZERO, self.a / lc, 0, reduced=True)
        m = self.m
        norm = self.a * self.a - (self.b * self.b) * m
        return RatFun(self.d * self.a, -(self.d * self.b), norm, m)

    def __truediv__(self, other):
        if not isinstance(other, RatFun):
            try:
                c = FieldScalar.coerce(other)
            except TypeError:
                return NotImplemented
            return self.scale(c.inverse())
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFun.const(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if not self.b:
            return RatFun(self.a ** k, _ZERO, self.d ** k, 0, reduced=True)
        result, base = RatFun.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "RatFun":
        if not self.b:
            return self
        return RatFun(self.a, -self.b, self.d, self.m, reduced=True)

    def derivative(self) -> "RatFun":
        d = self.d
        if d.degree() == 0:
            return RatFun(self.a.derivative(), self.b.derivative() if self.b else _ZERO, _ONE, self.m, reduced=True)
        dd = d.derivative()
        g = d.gcd(dd)
        e = d / g
        f = dd / g
        a = self.a.derivative() * e - self.a * f
        b = self.b.derivative() * e - self.b * f if self.b else _ZERO
        return RatFun(a, b, d * e, self.m)

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, RatFun):
            try:
                other = RatFun.const(other)
            except TypeError:
                return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d and self.tag == other.tag

    def __hash__(self):
        return hash((str(self.a), str(self.b), str(self.d), self.tag))

    # evaluation -------------------------------------------------------------
    def __call__(self, s0) -> FieldScalar:
        s0 = FieldScalar.coerce(s0)
        den = _eval_poly(self.d, s0)
        if den.is_zero():
            raise ZeroDivisionError("pole of rational function")
        num = _eval_poly(self.a, s0)
        if self.b:
            num = num + _eval_poly(self.b, s0) * FieldScalar(0, 1, self.m)
        return num / den

    def degree_pair(self) -> tuple[int, int]:
        num = max(self.a.degree(), self.b.degree())
        return num, self.d.degree()

    def height(self) -> int:
        return max(self.degree_pair())

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        num = str(self.a) if not self.b else f"({self.a}) + sqrt({self.m})*({self.b})"
        if self.d.degree() == 0:
            return num
        return f"({num})/({self.d})"


def _mk_real(a: fmpq_poly, d: fmpq_poly) -> RatFun:
    lc = d.leading_coefficient()
    if lc != 1:
        a, d = a / lc, d / lc
    if not a:
        d = _ONE
    return RatFun(a, _ZERO, d, 0, reduced=True)


def _eval_poly(p: fmpq_poly, s0: FieldScalar) -> FieldScalar:
    acc = FieldScalar(0)
    for c in reversed(p.coeffs()):
        acc = acc * s0 + FieldScalar(to_fraction(c))
    return acc
