"""Arithmetic in K(s)[t1, t2] / (t1^2 - P1(s), t2^2 - P2(s)), K = Q or Q(sqrt(m)).

Elements are stored on the basis ``1, t1, t2, t1*t2`` with reduced
:class:`~painleve6.ratfun.RatFun` components.  Zero, one or two radicals are
supported; components beyond the radical count stay zero.
"""

from __future__ import annotations

from flint import fmpq, fmpq_poly, fmpz

from .ratfun import RatFun
from .scalars import FieldScalar


class RadicalError(ValueError):
    pass


class RadicalSet:
    """Defining polynomials of the radicals.

    Each must be squarefree unless ``check=False`` (only useful for small
    experiments such as ``t^2 = s^3``; catalog radicals are always checked).
    """

    __slots__ = ("P1", "P2", "_rf", "_log")

    def __init__(self, P1: fmpq_poly | None = None, P2: fmpq_poly | None = None, check: bool = True):
        if P2 is not None and P1 is None:
            raise RadicalError("second radical given without a first")
        for P in (P1, P2):
            if P is None:
                continue
            if not P:
                raise RadicalError("radical polynomial is zero")
            if P.degree() < 1:
                raise RadicalError("radical polynomial must depend on s")
            if check and P.gcd(P.derivative()).degree() > 0:
                raise RadicalError(f"radical polynomial {P} is not squarefree")
        self.P1, self.P2 = P1, P2
        self._rf = tuple(RatFun.poly(P) for P in (P1, P2) if P is not None)
        # t_i' / t_i = P_i' / (2 P_i)
        self._log = tuple(RatFun(P.derivative(), None, 2 * P) for P in (P1, P2) if P is not None)

    @property
    def count(self) -> int:
        return len(self._rf)

    def polys(self) -> tuple[fmpq_poly, ...]:
        return tuple(P for P in (self.P1, self.P2) if P is not None)

    def genus_claims(self) -> tuple[int, ...]:
        """Hyperelliptic genus ceil(deg/2) - 1 of each radical curve."""
        return tuple((P.degree() + 1) // 2 - 1 for P in self.polys())

    def __eq__(self, other):
        return isinstance(other, RadicalSet) and self.P1 == other.P1 and self.P2 == other.P2

    def __hash__(self):
        return hash((str(self.P1), str(self.P2)))

    def __repr__(self):
        return f"RadicalSet(P1={self.P1}, P2={self.P2})"


NO_RADICALS = RadicalSet()


def normalize_radical(P: fmpq_poly) -> tuple[fmpq_poly, fmpq_poly]:
    """Split ``P = (c*g)^2 * Q`` with ``Q`` squarefree over Z and square-free content.

    Returns ``(Q, c*g)``: a radical ``t`` with ``t^2 = P`` is ``t = c*g*T``
    where ``T^2 = Q``.
    """
    if not P:
        raise RadicalError("radical polynomial is zero")
    const, facs = P.factor_squarefree()
    const = fmpq(const)
    g = fmpq_poly(1)
    Q = fmpq_poly(1)
    for f, e in facs:
        g *= f ** (e // 2)
        if e % 2:
            Q *= f
    # const = p/q = (p*q)/q^2 ; pull the square part of p*q out
    n = int(const.p) * int(const.q)
    sign = -1 if n < 0 else 1
    root, core = 1, sign
    for prime, e in fmpz(abs(n)).factor():
        root *= int(prime) ** (e // 2)
        if e % 2:
            core *= int(prime)
    scale = fmpq(root, int(const.q))
    return Q * core, g * scale


_Z = RatFun(0)


class FFElem:
    __slots__ = ("rad", "c")

    def __init__(self, rad: RadicalSet, c00, c10=None, c01=None, c11=None):
        comps = [_coerce(c00), _coerce(c10), _coerce(c01), _coerce(c11)]
        n = rad.count
        if n < 1 and (comps[1] or comps[3]):
            raise RadicalError("t1 component without a first radical")
        if n < 2 and (comps[2] or comps[3]):
            raise RadicalError("t2 component without a second radical")
        self.rad = rad
        self.c = tuple(comps)

    @classmethod
    def const(cls, rad: RadicalSet, value) -> "FFElem":
        return cls(rad, RatFun.const(value))

    @classmethod
    def s(cls, rad: RadicalSet) -> "FFElem":
        return cls(rad, RatFun.gen())

    @classmethod
    def t1(cls, rad: RadicalSet) -> "FFElem":
        return cls(rad, _Z, RatFun(1))

    @classmethod
    def t2(cls, rad: RadicalSet) -> "FFElem":
        return cls(rad, _Z, _Z, RatFun(1))

    # helpers ----------------------------------------------------------------
    def _lift(self, other) -> "FFElem":
        if isinstance(other, FFElem):
            if other.rad != self.rad:
                raise RadicalError("elements live over different radical sets")
            return other
        return FFElem(self.rad, _coerce(other))

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self):
        return not self.is_zero()

    def in_base(self) -> bool:
        """True if the element lies in K(s)."""
        return not (self.c[1] or self.c[2] or self.c[3])

    def radicals_used(self) -> tuple[bool, bool]:
        return bool(self.c[1] or self.c[3]), bool(self.c[2] or self.c[3])

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        return FFElem(self.rad, *(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return FFElem(self.rad, *(-a for a in self.c))

    def __sub__(self, other):
        o = self._lift(other)
        return FFElem(self.rad, *(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, FFElem):
            if isinstance(other, RatFun):
                return FFElem(self.rad, *(a * other for a in self.c))
            c = FieldScalar.coerce(other)
            return FFElem(self.rad, *(a.scale(c) for a in self.c))
        o = self._lift(other)
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = o.c
        n = self.rad.count
        if n == 0 or (self.in_base() or o.in_base()):
            if self.in_base():
                return FFElem(self.rad, *(a0 * b for b in o.c))
            return FFElem(self.rad, *(a * b0 for a in self.c))
        P1 = self.rad._rf[0]
        if n == 1:
            c0 = a0 * b0 + a1 * b1 * P1
            c1 = a0 * b1 + a1 * b0
            return FFElem(self.rad, c0, c1)
        P2 = self.rad._rf[1]
        c0 = a0 * b0 + (a1 * b1) * P1 + (a2 * b2) * P2 + (a3 * b3) * (P1 * P2)
        c1 = a0 * b1 + a1 * b0 + (a2 * b3 + a3 * b2) * P2
        c2 = a0 * b2 + a2 * b0 + (a1 * b3 + a3 * b1) * P1
        c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1
        return FFElem(self.rad, c0, c1, c2, c3)

    __rmul__ = __mul__

    def conj(self, which: int) -> "FFElem":
        """Apply t_which -> -t_which."""
        a0, a1, a2, a3 = self.c
        if which == 1:
            return FFElem(self.rad, a0, -a1, a2, -a3)
        return FFElem(self.rad, a0, a1, -a2, -a3)

    def inverse(self) -> "FFElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero function-field element")
        if self.in_base():
            return FFElem(self.rad, self.c[0].inverse())
        if self.rad.count == 2 and (self.c[2] or self.c[3]):
            # a * conj2(a) lies in K(s)[t1]
            cj = self.conj(2)
            return cj * (self * cj).inverse()
        cj = self.conj(1)
        norm = (self * cj).c[0]
        return cj * norm.inverse()

    def __truediv__(self, other):
        if isinstance(other, FFElem):
            return self * other.inverse()
        if isinstance(other, RatFun):
            return self * other.inverse()
        return self * FieldScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = FFElem.const(self.rad, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def d_ds(self) -> "FFElem":
        """Derivative in s, using t_i' = P_i' t_i / (2 P_i)."""
        a0, a1, a2, a3 = self.c
        out = [a0.derivative(), _Z, _Z, _Z]
        n = self.rad.count
        if n >= 1:
            L1 = self.rad._log[0]
            if a1:
                out[1] = a1.derivative() + a1 * L1
        if n == 2:
            L2 = self.rad._log[1]
            if a2:
                out[2] = a2.derivative() + a2 * L2
            if a3:
                out[3] = a3.derivative() + a3 * (L1 + L2)
        return FFElem(self.rad, *out)

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except (RadicalError, TypeError):
            return False
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        names = ("", "*t1", "*t2", "*t1*t2")
        parts = [f"({c}){n}" for c, n in zip(self.c, names) if c]
        return "FFElem(" + (" + ".join(parts) if parts else "0") + ")"

    def height(self) -> int:
        return max(c.height() for c in self.c)


def _coerce(value) -> RatFun:
    if value is None:
        return _Z
    if isinstance(value, RatFun):
        return value
    return RatFun.const(value)
