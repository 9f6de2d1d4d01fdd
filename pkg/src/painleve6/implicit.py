"""Implicitization of parametric solutions and the curve statistics.

A parametrization ``x(s, t1, t2)``, ``u(s, t1, t2)`` is turned into two
polynomials ``D1(s, X)`` and ``D2(s, U, X)`` by eliminating the radicals one at
a time, then ``Res_s(D1, D2)`` is taken.  Its primitive part in ``U`` is a
power of the curve; the power is checked to be one and the curve is certified
by substituting the parametrization back in.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from flint import fmpq_poly

from .funcfield import FFElem
from .poly import (
    PlaneCurve,
    Poly1,
    Poly2,
    PolyError,
    gcd1,
    mpoly_ctx,
    poly2_from_parts,
    reduce_I,
    split_I,
)
from .pvi import ParamSolution
from .scalars import FieldScalar


class ImplicitizationError(RuntimeError):
    pass


@dataclass(frozen=True)
class CurveStats:
    b: int
    d: int
    terms: int
    monic_in_u: bool
    field: str

    @property
    def d_minus_b(self) -> int:
        return self.d - self.b

    def as_tuple(self):
        return (self.b, self.d - self.b, self.terms)


def curve_stats(P: PlaneCurve) -> CurveStats:
    return CurveStats(P.b, P.d, P.n_terms, P.monic_in_u(), P.field)


# ---------------------------------------------------------------------------
# building the elimination system
# ---------------------------------------------------------------------------
class System:
    """Polynomial ring Z[s, T1.., U, X, (I)] plus the radical relations."""

    def __init__(self, rad, gaussian: bool):
        self.nrad = rad.count
        names = ["s"] + [f"T{k + 1}" for k in range(self.nrad)] + ["U", "X"]
        if gaussian:
            names.append("I")
        self.gaussian = gaussian
        self.names = tuple(names)
        self.ctx = mpoly_ctx(names)
        self.iU = names.index("U")
        self.iX = names.index("X")
        # T_k = c_k * t_k with c_k^2 * P_k integral
        self.scale = []
        self.P = []
        for P in rad.polys():
            c = int(P.denom())
            self.scale.append(c)
            self.P.append(self.from_fmpq_poly(P * (c * c)))

    def gen(self, name):
        return self.ctx.gen(self.names.index(name))

    def from_fmpq_poly(self, p: fmpq_poly, den: int = 1):
        d = {}
        n = len(self.names)
        for k, c in enumerate(p.coeffs()):
            if c:
                mono = [0] * n
                mono[0] = k
                v = c * den
                if v.q != 1:
                    raise ValueError("non-integral coefficient")
                d[tuple(mono)] = int(v.p)
        return self.ctx.from_dict(d)

    def reduce(self, p):
        """Rewrite T_k^2 -> P_k and I^2 -> -1."""
        for k in range(self.nrad):
            p = self._reduce_var(p, k + 1, self.P[k])
        if self.gaussian:
            p = reduce_I(p, self.ctx)
        return p

    def _reduce_var(self, p, idx, P):
        if p.is_zero() or p.degrees()[idx] < 2:
            return p
        parts = self.split(p, idx)
        out = self.ctx.from_dict({})
        T = self.ctx.gen(idx)
        pw = {0: self.ctx.from_dict({(0,) * len(self.names): 1})}
        for e, c in parts.items():
            h = e // 2
            if h not in pw:
                pw[h] = P ** h
            out += c * pw[h] * (T if e % 2 else 1)
        return out

    def split(self, p, idx):
        """{exponent of generator idx: coefficient without that generator}."""
        groups = {}
        for mono, c in zip(p.monoms(), p.coeffs()):
            e = mono[idx]
            m2 = mono[:idx] + (0,) + mono[idx + 1:]
            groups.setdefault(e, {})[m2] = int(c)
        return {e: self.ctx.from_dict(d) for e, d in groups.items()}

    def element(self, e: FFElem, var: str):
        """``VAR * den - num`` cleared to integer coefficients."""
        comps = e.c
        den = fmpq_poly(1)
        for c in comps:
            if c:
                den = _lcm_poly(den, c.d)
        pieces = []
        for k, c in enumerate(comps):
            if not c:
                continue
            mult = den / c.d
            a = c.a * mult
            b = c.b * mult if c.b else None
            pieces.append((k, a, b))
        L = int(den.denom())
        for k, a, b in pieces:
            sc = self._basis_scale(k)
            L = lcm(L, int((a / sc).denom()) if a else 1, int((b / sc).denom()) if b else 1)
        V = self.gen(var)
        total = V * self.from_fmpq_poly(den, L)
        for k, a, b in pieces:
            sc = self._basis_scale(k)
            mono = self._basis_mono(k)
            if a:
                total -= self.from_fmpq_poly(a / sc, L) * mono
            if b:
                total -= self.from_fmpq_poly(b / sc, L) * mono * self.gen("I")
        return total

    def _basis_scale(self, k):
        sc = 1
        if k in (1, 3):
            sc *= self.scale[0]
        if k in (2, 3):
            sc *= self.scale[1]
        return sc

    def _basis_mono(self, k):
        one = self.ctx.from_dict({(0,) * len(self.names): 1})
        m = one
        if k in (1, 3):
            m = m * self.gen("T1")
        if k in (2, 3):
            m = m * self.gen("T2")
        return m

    def strip_s_content(self, p):
        """Remove factors depending on s (and I) only."""
        keep = [i for i, n in enumerate(self.names) if n not in ("s", "I")]
        groups = {}
        for mono, c in zip(p.monoms(), p.coeffs()):
            key = tuple(mono[i] for i in keep)
            m2 = tuple(v if n in ("s", "I") else 0 for v, n in zip(mono, self.names))
            groups.setdefault(key, {})[m2] = int(c)
        g = None
        for d in groups.values():
            q = self.ctx.from_dict(d)
            g = q if g is None else g.gcd(q)
            if g.is_constant():
                break
        if g is None or g.is_constant():
            return p
        q, r = divmod(p, g)
        if not r.is_zero():  # pragma: no cover
            raise ImplicitizationError("content division failed")
        return q


def _lcm_poly(a: fmpq_poly, b: fmpq_poly) -> fmpq_poly:
    g = a.gcd(b)
    return a * b / g


def elimination_system(x: FFElem, u: FFElem):
    """Return ``(system, D1, D2)`` with D1 in Z[s, X], D2 in Z[s, U, X]."""
    if x.rad != u.rad:
        raise ImplicitizationError("x and u over different radical sets")
    gaussian = any(c.b for c in x.c + u.c)
    S = System(x.rad, gaussian)
    Ex = S.reduce(S.element(x, "X"))
    Eu = S.reduce(S.element(u, "U"))
    for k in range(S.nrad, 0, -1):
        idx = k
        px = S.split(Ex, idx)
        pu = S.split(Eu, idx)
        zero = S.ctx.from_dict({})
        x0, x1 = px.get(0, zero), px.get(1, zero)
        u0, u1 = pu.get(0, zero), pu.get(1, zero)
        Pk = S.P[k - 1]
        if not x1.is_zero():
            Ex, Eu = x0 * x0 - x1 * x1 * Pk, u0 * x1 - u1 * x0
        elif not u1.is_zero():
            Eu = u0 * u0 - u1 * u1 * Pk
        Ex, Eu = S.reduce(Ex), S.reduce(Eu)
        Ex, Eu = S.strip_s_content(Ex), S.strip_s_content(Eu)
    return S, Ex, Eu


def _to_poly2(S: System, r) -> Poly2:
    if S.gaussian:
        re, im = split_I(reduce_I(r, S.ctx), S.ctx)
    else:
        re, im = dict(zip(r.monoms(), map(int, r.coeffs()))), {}
    return poly2_from_parts(re, im, S.iU, S.iX)


# ---------------------------------------------------------------------------
# content removal over Q or Q(i)
# ---------------------------------------------------------------------------
def _coeff_polys(P: Poly2, axis: int):
    """Coefficients of P along ``axis`` (0: powers of u) as Poly1 in the other variable."""
    groups = {}
    for (i, j), c in P.terms.items():
        k, e = (i, j) if axis == 0 else (j, i)
        groups.setdefault(k, {})[e] = c
    var = "x" if axis == 0 else "u"
    out = {}
    for k, d in groups.items():
        n = max(d) + 1
        out[k] = Poly1([d.get(e, 0) for e in range(n)], var)
    return out


def primitive_part(P: Poly2, axis: int) -> Poly2:
    coeffs = _coeff_polys(P, axis)
    g = None
    for c in sorted(coeffs.values(), key=lambda p: p.degree()):
        g = c.monic() if g is None else gcd1(g, c)
        if g.degree() == 0:
            return P
    if g is None or g.degree() <= 0:
        return P
    out = {}
    for k, c in coeffs.items():
        q, r = c.divmod(g)
        if r:
            raise ImplicitizationError("content division failed")
        for e, v in enumerate(q.coeffs):
            if not v.is_zero():
                out[(k, e) if axis == 0 else (e, k)] = v
    return Poly2(out)


def _specialize_x(P: Poly2, x0) -> Poly1:
    cs = {}
    for (i, j), c in P.terms.items():
        cs[i] = cs.get(i, FieldScalar(0)) + c * FieldScalar(x0) ** j
    n = max(cs) + 1
    return Poly1([cs.get(i, 0) for i in range(n)], "u")


def _is_squarefree_generic(P: Poly2, rng) -> bool:
    for _ in range(3):
        x0 = Fraction(rng.randint(-97, 97), rng.randint(1, 13))
        f = _specialize_x(P, x0)
        if f.degree() != P.deg_u():
            continue
        if gcd1(f, f.derivative()).degree() == 0:
            return True
    return False


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------
def raw_resultant(sol_or_x, u=None):
    x = sol_or_x.x if isinstance(sol_or_x, ParamSolution) else sol_or_x
    u = sol_or_x.u if isinstance(sol_or_x, ParamSolution) else u
    S, D1, D2 = elimination_system(x, u)
    if D1.degrees()[0] < 1 or D2.degrees()[0] < 1:
        raise ImplicitizationError("parametrization does not depend on s")
    r = D1.resultant(D2, "s")
    if r.is_zero():
        raise ImplicitizationError("resultant vanishes identically (degenerate parametrization)")
    return _to_poly2(S, r)


def implicitize(sol: ParamSolution, certify: bool = True, seed: int = 0, method: str = "auto") -> PlaneCurve:
    """The irreducible plane curve ``P(u, x) = 0`` through the parametrization.

    ``method="exact"`` takes the resultant over Z (or Z[i]) directly.
    ``"modular"`` lifts prime images by CRT and then certifies the lift by
    substitution.  ``"auto"`` uses the modular route for Gaussian
    coefficients, where the exact resultant with the extra generator is slow.
    """
    if sol.x.d_ds().is_zero():
        raise ImplicitizationError("x is constant")
    if method not in ("auto", "exact", "modular"):
        raise ValueError(f"unknown method {method!r}")
    gaussian = any(c.b for c in sol.x.c + sol.u.c)
    if method == "modular" or (method == "auto" and gaussian):
        from .modular import reconstruct_curve

        return reconstruct_curve(sol, seed=seed, certify=True)
    R = raw_resultant(sol)
    R = primitive_part(primitive_part(R, 0), 1)
    if R.deg_u() < 1 or R.deg_x() < 1:
        raise ImplicitizationError("elimination produced a curve missing u or x")
    rng = random.Random(seed)
    if not _is_squarefree_generic(R, rng):
        R = _reduce_power(R)
    curve = PlaneCurve(R)
    if certify and not vanishes_on(curve, sol.x, sol.u):
        raise ImplicitizationError("no factor of the resultant vanishes on the parametrization")
    return curve


def _reduce_power(R: Poly2) -> Poly2:
    """Fallback for non-proper parametrizations: pick the factor of least u-degree."""
    from .poly import mpoly_ctx as _ctx

    if R.tag():
        raise ImplicitizationError("resultant is a proper power over Q(i); parametrization not proper")
    ctx = _ctx(("u", "x"))
    den = 1
    for c in R.terms.values():
        den = lcm(den, c.a.denominator)
    p = ctx.from_dict({(i, j): int(c.a * den) for (i, j), c in R.terms.items()})
    _, facs = p.factor()
    best = min((f for f, _ in facs if not f.is_constant()), key=lambda f: f.degrees()[0])
    return Poly2({m: int(c) for m, c in zip(best.monoms(), best.coeffs())})


def vanishes_on(curve: PlaneCurve, x: FFElem, u: FFElem) -> bool:
    """Exact test ``P(u, x) = 0`` in the function field."""
    P = curve.poly
    # Horner in u with x-powers cached
    xs = [FFElem.const(x.rad, 1)]
    for _ in range(P.deg_x()):
        xs.append(xs[-1] * x)
    rows = {}
    for (i, j), c in P.terms.items():
        rows.setdefault(i, []).append((j, c))
    acc = None
    for i in range(P.deg_u(), -1, -1):
        row = rows.get(i)
        coef = None
        if row:
            coef = FFElem.const(x.rad, 0)
            for j, c in row:
                coef = coef + xs[j] * c
        acc = coef if acc is None else (acc * u + coef if coef is not None else acc * u)
    return acc.is_zero()


def homography_image(P: PlaneCurve, h) -> PlaneCurve:
    """Curve of the image solution: substitute the row's (u, x) = f(U, X)."""
    u_expr, x_expr = h.poly_maps()
    num = _substitute(P.poly, u_expr, x_expr)
    num = primitive_part(primitive_part(num, 0), 1)
    return PlaneCurve(num)


def invariance_check(P: PlaneCurve, h) -> bool:
    return homography_image(P, h) == P


def _substitute(P: Poly2, u_frac, x_frac) -> Poly2:
    """Numerator of ``P(un/ud, xn/xd)`` with Poly2 fractions."""
    un, ud = u_frac
    xn, xd = x_frac
    bu, bx = P.deg_u(), P.deg_x()
    upow_n = [Poly2.const(1)]
    upow_d = [Poly2.const(1)]
    for _ in range(bu):
        upow_n.append(upow_n[-1] * un)
        upow_d.append(upow_d[-1] * ud)
    xpow_n = [Poly2.const(1)]
    xpow_d = [Poly2.const(1)]
    for _ in range(bx):
        xpow_n.append(xpow_n[-1] * xn)
        xpow_d.append(xpow_d[-1] * xd)
    out = Poly2()
    for (i, j), c in P.terms.items():
        out = out + (upow_n[i] * upow_d[bu - i] * xpow_n[j] * xpow_d[bx - j]).scale(c)
    return out


def stats_of(sol: ParamSolution, certify: bool = True) -> tuple[PlaneCurve, CurveStats]:
    P = implicitize(sol, certify=certify)
    return P, curve_stats(P)


__all__ = [
    "CurveStats", "ImplicitizationError", "curve_stats", "elimination_system",
    "implicitize", "invariance_check", "homography_image", "primitive_part",
    "raw_resultant", "stats_of", "vanishes_on", "PolyError",
]
