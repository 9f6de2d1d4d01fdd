"""Univariate and bivariate polynomials over FieldScalar.

``Poly1`` is a dense univariate polynomial, ``Poly2`` a sparse polynomial in
``(u, x)``.  Heavy elimination goes through flint's ``fmpz_mpoly``; Gaussian
coefficients are handled there with an extra generator ``I`` reduced modulo
``I^2 + 1``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from flint import fmpq_poly, fmpz, fmpz_mpoly_ctx

from .scalars import FieldMismatch, FieldScalar, ONE, ZERO


class PolyError(ValueError):
    pass


def _fs(c) -> FieldScalar:
    return c if isinstance(c, FieldScalar) else FieldScalar.coerce(c)


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------
class Poly1:
    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs=(), var: str = "s"):
        cs = [_fs(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)

    @classmethod
    def from_fmpq_poly(cls, p: fmpq_poly, var: str = "s") -> "Poly1":
        return cls([Fraction(int(c.p), int(c.q)) for c in p.coeffs()], var)

    def to_fmpq_poly(self) -> fmpq_poly:
        if any(c.b for c in self.coeffs):
            raise PolyError("polynomial has non-rational coefficients")
        return fmpq_poly([_q(c.a) for c in self.coeffs])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self) -> FieldScalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def _check(self, other):
        if not isinstance(other, Poly1):
            other = Poly1([other], self.var)
        elif other.var != self.var:
            raise PolyError(f"variables differ: {self.var} vs {other.var}")
        return other

    def __add__(self, other):
        o = self._check(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = o.coeffs + (ZERO,) * (n - len(o.coeffs))
        return Poly1([x + y for x, y in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly1([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        o = self._check(other)
        if not self.coeffs or not o.coeffs:
            return Poly1([], self.var)
        out = [ZERO] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly1(out, self.var)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly1":
        c = _fs(c)
        return Poly1([a * c for a in self.coeffs], self.var)

    def divmod(self, other: "Poly1"):
        o = self._check(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        q = [ZERO] * max(len(r) - len(o.coeffs) + 1, 0)
        inv = o.lc().inverse()
        dq = len(o.coeffs) - 1
        for k in range(len(r) - 1, dq - 1, -1):
            c = r[k]
            if c.is_zero():
                continue
            f = c * inv
            q[k - dq] = f
            for j, b in enumerate(o.coeffs):
                r[k - dq + j] = r[k - dq + j] - f * b
        return Poly1(q, self.var), Poly1(r[:dq], self.var)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "Poly1":
        if self.is_zero():
            return self
        return self.scale(self.lc().inverse())

    def derivative(self) -> "Poly1":
        return Poly1([c * k for k, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, v):
        v = _fs(v)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly1):
            try:
                other = Poly1([other], self.var)
            except TypeError:
                return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"Poly1({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            parts.append(_term_text(c, mono))
        return _join_terms(parts)


def gcd1(A: Poly1, B: Poly1) -> Poly1:
    """Monic gcd by Euclid over the coefficient field."""
    if A.var != B.var:
        raise PolyError(f"variables differ: {A.var} vs {B.var}")
    a, b = A, B
    if all(not c.b for c in a.coeffs + b.coeffs):
        g = a.to_fmpq_poly().gcd(b.to_fmpq_poly())
        return Poly1.from_fmpq_poly(g, A.var).monic()
    while b:
        a, b = b, a % b
        if b:
            b = b.monic()
    return a.monic()


def squarefree_part1(A: Poly1) -> Poly1:
    if A.degree() < 1:
        return A.monic()
    return (A // gcd1(A, A.derivative())).monic()


# ---------------------------------------------------------------------------
# bivariate in (u, x)
# ---------------------------------------------------------------------------
class Poly2:
    """Sparse polynomial ``sum c[i, j] u^i x^j``."""

    __slots__ = ("terms",)
    vars = ("u", "x")

    def __init__(self, terms=None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = _fs(c)
            if not c.is_zero():
                clean[(int(i), int(j))] = c
        self.terms = clean

    @classmethod
    def u(cls):
        return cls({(1, 0): 1})

    @classmethod
    def x(cls):
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def deg_u(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def deg_x(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def tag(self) -> int:
        m = 0
        for c in self.terms.values():
            if c.b:
                m = c.m
        return m

    def _lift(self, other):
        return other if isinstance(other, Poly2) else Poly2.const(other)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out[k] + c if k in out else c
        return Poly2(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly2({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        out = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in o.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out[k] + a * b if k in out else a * b
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly2.const(1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c):
        c = _fs(c)
        return Poly2({k: v * c for k, v in self.terms.items()})

    def __call__(self, u, x):
        """Evaluate at scalars or any ring elements supporting + and *."""
        by_u = {}
        for (i, j), c in self.terms.items():
            by_u.setdefault(i, {})[j] = c
        acc = None
        for i in range(self.deg_u(), -1, -1):
            row = by_u.get(i)
            coef = _horner(row, x) if row else None
            if acc is None:
                acc = coef
            else:
                acc = acc * u
                if coef is not None:
                    acc = acc + coef
        return acc if acc is not None else ZERO

    def coeff_in_u(self, i: int) -> Poly1:
        cs = {}
        for (a, j), c in self.terms.items():
            if a == i:
                cs[j] = c
        n = max(cs, default=-1) + 1
        return Poly1([cs.get(j, ZERO) for j in range(n)], "x")

    def __eq__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        """Terms by decreasing (deg_u, deg_x)."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __repr__(self):
        return f"Poly2({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            mono = "*".join(m for m in (_mono("u", i), _mono("x", j)) if m)
            parts.append(_term_text(c, mono))
        return _join_terms(parts)


def _horner(row: dict, x):
    acc = None
    for j in range(max(row), -1, -1):
        c = row.get(j)
        if acc is None:
            acc = c if c is not None else ZERO
        else:
            acc = acc * x
            if c is not None:
                acc = acc + c
    return acc


def _mono(v, k):
    if k == 0:
        return ""
    return v if k == 1 else f"{v}^{k}"


def _term_text(c: FieldScalar, mono: str) -> str:
    if not mono:
        txt = str(c)
        return f"({txt})" if c.b and c.a else txt
    if c == ONE:
        return mono
    if c == -ONE:
        return "-" + mono
    txt = str(c)
    if c.b and c.a:
        txt = f"({txt})"
    return f"{txt}*{mono}"


def _join_terms(parts):
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def _q(f: Fraction):
    from flint import fmpq

    return fmpq(f.numerator, f.denominator)


# ---------------------------------------------------------------------------
# plane curves
# ---------------------------------------------------------------------------
def _gauss_gcd(a: tuple, b: tuple) -> tuple:
    """gcd of Gaussian integers given as (re, im)."""
    while b != (0, 0):
        n = b[0] * b[0] + b[1] * b[1]
        # a / b = a * conj(b) / n, rounded
        re = a[0] * b[0] + a[1] * b[1]
        im = a[1] * b[0] - a[0] * b[1]
        q = (_round_div(re, n), _round_div(im, n))
        r = (a[0] - (q[0] * b[0] - q[1] * b[1]), a[1] - (q[0] * b[1] + q[1] * b[0]))
        a, b = b, r
    return a


def _round_div(p: int, q: int) -> int:
    return (2 * p + q) // (2 * q)


def _gauss_div(a: tuple, b: tuple) -> tuple:
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    if re % n or im % n:
        raise PolyError("inexact Gaussian division")
    return re // n, im // n


_UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))


class PlaneCurve:
    """Primitive integer or Gaussian-integer polynomial ``P(u, x)``, sign normalized.

    The largest term in (deg_u, deg_x) order gets a coefficient with positive
    real part and nonnegative imaginary part.
    """

    __slots__ = ("poly", "field")

    def __init__(self, P: Poly2):
        if P.is_zero():
            raise PolyError("the zero polynomial is not a curve")
        m = P.tag()
        if m not in (0, -1):
            raise FieldMismatch("curves are supported over Q and Q(i) only")
        den = 1
        for c in P.terms.values():
            den = lcm(den, c.a.denominator, c.b.denominator)
        ints = {k: (int(c.a * den), int(c.b * den)) for k, c in P.terms.items()}
        g = (0, 0)
        for v in ints.values():
            g = _gauss_gcd(g, v) if g != (0, 0) else v
            if g in _UNITS:
                break
        ints = {k: _gauss_div(v, g) for k, v in ints.items()} if g not in ((1, 0),) else ints
        top = max(ints)
        lead = ints[top]
        for unit in _UNITS:
            re = lead[0] * unit[0] - lead[1] * unit[1]
            im = lead[0] * unit[1] + lead[1] * unit[0]
            if re > 0 and im >= 0:
                break
        else:  # pragma: no cover
            raise PolyError("no unit normalizes the leading term")
        terms = {}
        for k, (a, b) in ints.items():
            re = a * unit[0] - b * unit[1]
            im = a * unit[1] + b * unit[0]
            terms[k] = FieldScalar(re, im, -1) if im else FieldScalar(re)
        self.poly = Poly2(terms)
        self.field = "Q(i)" if any(c.b for c in terms.values()) else "Q"

    @property
    def b(self) -> int:
        return self.poly.deg_u()

    @property
    def d(self) -> int:
        return self.poly.total_degree()

    @property
    def n_terms(self) -> int:
        return len(self.poly)

    def monic_in_u(self) -> bool:
        """Leading coefficient in u is a unit (the content is already removed)."""
        lead = self.poly.coeff_in_u(self.b)
        return lead.degree() == 0 and lead.lc().norm() == 1

    def term_list(self):
        """``[(deg_u, deg_x, coeff_text)]`` in decreasing order."""
        return [(i, j, str(c)) for (i, j), c in self.poly.sorted_terms()]

    @classmethod
    def from_term_list(cls, terms) -> "PlaneCurve":
        return cls(Poly2({(i, j): FieldScalar.coerce(c) for i, j, c in terms}))

    @classmethod
    def parse(cls, text: str) -> "PlaneCurve":
        from .parser import parse_tree, evaluate

        tree = parse_tree(text, ("u", "x"))
        val = evaluate(tree, {"u": Poly2.u(), "x": Poly2.x()}, lambda n: Poly2.const(n))
        if not isinstance(val, Poly2):
            val = Poly2.const(val)
        return cls(val)

    def __eq__(self, other):
        return isinstance(other, PlaneCurve) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def sort_key(self):
        return tuple((i, j, c.a, c.b) for (i, j), c in self.poly.sorted_terms())

    def __call__(self, u, x):
        return self.poly(u, x)

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"PlaneCurve({self})"


# ---------------------------------------------------------------------------
# flint bridge: Z[...][I]/(I^2+1)
# ---------------------------------------------------------------------------
def mpoly_ctx(names):
    return fmpz_mpoly_ctx.get(tuple(names), "lex")


def reduce_I(p, ctx):
    """Reduce a polynomial modulo I^2 + 1, where I is the last generator."""
    k = ctx.nvars() - 1
    d = p.degrees()[k] if not p.is_zero() else 0
    if d < 2:
        return p
    out = {}
    for mono, c in zip(p.monoms(), p.coeffs()):
        e = mono[k]
        sign = -1 if (e // 2) % 2 else 1
        m2 = mono[:k] + (e % 2,) + mono[k + 1:]
        out[m2] = out.get(m2, 0) + sign * int(c)
    return ctx.from_dict({m: c for m, c in out.items() if c})


def split_I(p, ctx):
    """Return (real, imaginary) parts of a polynomial reduced mod I^2+1."""
    k = ctx.nvars() - 1
    re, im = {}, {}
    for mono, c in zip(p.monoms(), p.coeffs()):
        e = mono[k]
        sign = -1 if (e // 2) % 2 else 1
        tgt = im if e % 2 else re
        m2 = mono[:k] + (0,) + mono[k + 1:]
        tgt[m2] = tgt.get(m2, 0) + sign * int(c)
    return re, im


def poly2_from_parts(re: dict, im: dict, iu: int, ix: int) -> Poly2:
    terms = {}
    for mono in set(re) | set(im):
        a, b = re.get(mono, 0), im.get(mono, 0)
        if a or b:
            terms[(mono[iu], mono[ix])] = FieldScalar(a, b, -1) if b else FieldScalar(a)
    return Poly2(terms)


def poly2_to_mpoly(P: Poly2, ctx, iu: int, ix: int, iI: int | None):
    """Integer polynomial after clearing denominators; returns (mpoly, den)."""
    den = 1
    for c in P.terms.values():
        den = lcm(den, c.a.denominator, c.b.denominator)
    n = ctx.nvars()
    d = {}
    for (i, j), c in P.terms.items():
        mono = [0] * n
        mono[iu] += i
        mono[ix] += j
        if c.a:
            d[tuple(mono)] = d.get(tuple(mono), 0) + int(c.a * den)
        if c.b:
            if iI is None:
                raise PolyError("Gaussian coefficient but no I generator")
            mono[iI] = 1
            d[tuple(mono)] = d.get(tuple(mono), 0) + int(c.b * den)
    return ctx.from_dict(d), den


# ---------------------------------------------------------------------------
# resultants in s with Poly2 coefficients
# ---------------------------------------------------------------------------
def _as_spoly(A):
    """Accept ``{k: Poly2}`` or a sequence indexed by power of s."""
    if isinstance(A, dict):
        return {int(k): v if isinstance(v, Poly2) else Poly2.const(v) for k, v in A.items()}
    return {k: v if isinstance(v, Poly2) else Poly2.const(v) for k, v in enumerate(A)}


def _s_degree(A: dict) -> int:
    return max((k for k, v in A.items() if not v.is_zero()), default=-1)


def resultant_s(A, B) -> Poly2:
    """Res_s(A, B) for A, B in K[u, x][s]; content stripped (not sign normalized)."""
    A, B = _as_spoly(A), _as_spoly(B)
    da, db = _s_degree(A), _s_degree(B)
    if da < 0 or db < 0:
        raise PolyError("resultant of a zero polynomial")
    if da < 1 or db < 1:
        raise PolyError("both polynomials need positive degree in s")
    gaussian = any(v.tag() for v in list(A.values()) + list(B.values()))
    names = ("s", "u", "x", "I") if gaussian else ("s", "u", "x")
    ctx = mpoly_ctx(names)
    iI = 3 if gaussian else None

    def build(S):
        total = ctx.from_dict({})
        den = 1
        for v in S.values():
            for c in v.terms.values():
                den = lcm(den, c.a.denominator, c.b.denominator)
        for k, v in S.items():
            part, dv = poly2_to_mpoly(v, ctx, 1, 2, iI)
            total += part * (den // dv) * ctx.gen(0) ** k
        return total

    pa, pb = build(A), build(B)
    r = pa.resultant(pb, "s")
    if gaussian:
        r = reduce_I(r, ctx)
        re, im = split_I(r, ctx)
        P = poly2_from_parts(re, im, 1, 2)
    else:
        P = poly2_from_parts(dict(zip(r.monoms(), map(int, r.coeffs()))), {}, 1, 2)
    return strip_content(P)


def strip_content(P: Poly2) -> Poly2:
    """Divide by the (Gaussian) integer content; sign untouched."""
    if P.is_zero():
        return P
    den = 1
    for c in P.terms.values():
        den = lcm(den, c.a.denominator, c.b.denominator)
    ints = {k: (int(c.a * den), int(c.b * den)) for k, c in P.terms.items()}
    if all(b == 0 for _, b in ints.values()):
        g = 0
        for a, _ in ints.values():
            g = gcd(g, a)
        return Poly2({k: Fraction(a, g) for k, (a, _) in ints.items()})
    g = (0, 0)
    for v in ints.values():
        g = _gauss_gcd(g, v) if g != (0, 0) else v
    out = {}
    for k, v in ints.items():
        re, im = _gauss_div(v, g)
        out[k] = FieldScalar(re, im, -1) if im else FieldScalar(re)
    return Poly2(out)


def sylvester_matrix(A, B):
    """Sylvester matrix (list of rows, entries Poly2) of A, B in s."""
    A, B = _as_spoly(A), _as_spoly(B)
    m, n = _s_degree(A), _s_degree(B)
    size = m + n
    zero = Poly2()
    rows = []
    for r in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[r + m - k] = A.get(k, zero)
        rows.append(row)
    for r in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[r + n - k] = B.get(k, zero)
        rows.append(row)
    return rows


def sylvester_resultant(A, B) -> Poly2:
    """Determinant of the Sylvester matrix by Laplace expansion (small degrees only)."""
    M = sylvester_matrix(A, B)
    n = len(M)
    if n > 12:
        raise PolyError("Sylvester oracle limited to deg A + deg B <= 12")
    memo = {}

    # sign alternates over the columns still free
    def det2(row, cols):
        if row == n:
            return Poly2.const(1)
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = Poly2()
        free_left = 0
        for c in range(n):
            if cols >> c & 1:
                continue
            e = M[row][c]
            if not e.is_zero():
                term = e * det2(row + 1, cols | (1 << c))
                acc = acc - term if free_left % 2 else acc + term
            free_left += 1
        memo[key] = acc
        return acc

    return det2(0, 0)


def fmpz_to_int(c) -> int:
    return int(fmpz(c))
