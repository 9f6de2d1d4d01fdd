"""Curve statistics and curve reconstruction through images modulo primes.

The elimination system ``D1(s, X), D2(s, U, X)`` is built exactly, reduced
modulo word-size primes ``p = 1 (mod 4)`` (so that ``i`` maps to a square root
of -1), and ``Res_s`` is interpolated on a grid of ``(U, X)`` values with the
kernels in :mod:`painleve6.kernels`.  The squarefree, content-free part of the
image is the curve modulo ``p``.

Two uses:

* :func:`modular_curve_stats` reads off ``b``, ``d`` and the term count from
  several primes and requires them to agree.
* :func:`reconstruct_curve` lifts the images back to Q or Q(i) by CRT and
  rational reconstruction; the result is then certified exactly by
  substitution, so nothing modular survives in the answer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import flint
import numpy as np

from . import kernels
from .implicit import (
    CurveStats,
    ImplicitizationError,
    elimination_system,
    vanishes_on,
)
from .poly import PlaneCurve, Poly2
from .pvi import ParamSolution
from .scalars import FieldScalar

PRIME_CEILING = 2**31


class ModularError(RuntimeError):
    pass


def primes_1mod4(count: int, below: int = PRIME_CEILING):
    out = []
    n = below - 1
    n -= (n - 1) % 4
    while len(out) < count:
        if flint.fmpz(n).is_prime():
            out.append(n)
        n -= 4
    return out


def sqrt_minus_one(p: int) -> int:
    for g in range(2, p):
        r = pow(g, (p - 1) // 4, p)
        if r * r % p == p - 1:
            return min(r, p - r)
    raise ValueError(f"{p} is not 1 mod 4")  # pragma: no cover


# ---------------------------------------------------------------------------
# reduction of the elimination system
# ---------------------------------------------------------------------------
@dataclass
class Elimination:
    names: tuple
    gaussian: bool
    D1: dict  # {(s, U, X, I): int}
    D2: dict
    deg1: tuple  # (s, U, X)
    deg2: tuple

    @classmethod
    def of(cls, sol: ParamSolution) -> "Elimination":
        S, D1, D2 = elimination_system(sol.x, sol.u)
        keep = [S.names.index(n) for n in ("s", "U", "X")]
        iI = S.names.index("I") if S.gaussian else None

        def flat(D):
            out = {}
            for mono, c in zip(D.monoms(), D.coeffs()):
                key = tuple(mono[k] for k in keep) + ((mono[iI],) if iI is not None else (0,))
                out[key] = int(c)
            return out

        def degs(D):
            dg = D.degrees()
            return tuple(dg[k] for k in keep)

        if degs(D1)[0] < 1 or degs(D2)[0] < 1:
            raise ImplicitizationError("parametrization does not depend on s")
        return cls(S.names, S.gaussian, flat(D1), flat(D2), degs(D1), degs(D2))

    def arrays(self, p: int, r: int):
        """Dense residue arrays (ns, nu, nx) with I -> r."""
        out = []
        for D, dg in ((self.D1, self.deg1), (self.D2, self.deg2)):
            A = np.zeros(tuple(v + 1 for v in dg), dtype=np.int64)
            for (a, b, c, e), v in D.items():
                A[a, b, c] = (int(A[a, b, c]) + v * pow(r, e, p)) % p
            out.append(A)
        return out

    def bounds(self):
        s1, u1, x1 = self.deg1
        s2, u2, x2 = self.deg2
        return s2 * u1 + s1 * u2, s2 * x1 + s1 * x2


def _fresh(rng, p, n, avoid):
    vals = []
    while len(vals) < n:
        v = rng.randrange(1, p)
        if v not in avoid:
            avoid.add(v)
            vals.append(v)
    return vals


def resultant_image(E: Elimination, p: int, r: int, rng) -> dict:
    """``Res_s(D1, D2)`` modulo p as ``{(i, j): c}`` (powers of U, X)."""
    A1, A2 = E.arrays(p, r)
    if not A1[-1].any() or not A2[-1].any():
        raise ModularError(f"leading s-coefficient vanishes mod {p}")
    bu, bx = E.bounds()
    used = set()
    us = np.array(_fresh(rng, p, bu + 1, used), dtype=np.int64)
    xs = np.array(_fresh(rng, p, bx + 1, used), dtype=np.int64)
    vals, ok = kernels.resultant_grid(A1, A2, us, xs, p)
    for _ in range(20):
        bad = np.flatnonzero(~ok.all(axis=1))
        if bad.size == 0:
            break
        xs[bad] = _fresh(rng, p, bad.size, used)
        v2, ok2 = kernels.resultant_grid(A1, A2, us, xs[bad], p)
        vals[bad], ok[bad] = v2, ok2
    else:
        raise ModularError(f"could not find faithful evaluation points mod {p}")
    rows = kernels.interpolate_rows(us, vals, p)  # rows[j] = coeffs in U at xs[j]
    cols = kernels.interpolate_rows(xs, np.ascontiguousarray(rows.T), p)  # cols[i] = coeffs in X
    nz = np.argwhere(cols != 0)
    return {(int(i), int(j)): int(cols[i, j]) for i, j in nz}


_CTX_CACHE = {}


def _ctx(p):
    if p not in _CTX_CACHE:
        _CTX_CACHE[p] = flint.nmod_mpoly_ctx.get(("U", "X"), ordering="lex", modulus=p)
    return _CTX_CACHE[p]


def _content_free(f, ctx, axis):
    """Divide out the gcd of the coefficients of ``f`` along ``axis`` (0: U)."""
    groups = {}
    for mono, c in zip(f.monoms(), f.coeffs()):
        k = mono[axis]
        rest = (0, mono[1]) if axis == 0 else (mono[0], 0)
        groups.setdefault(k, {})[rest] = int(c)
    g = None
    for d in groups.values():
        q = ctx.from_dict(d)
        g = q if g is None else g.gcd(q)
        if g.is_constant():
            return f
    q, rem = divmod(f, g)
    if not rem.is_zero():  # pragma: no cover
        raise ModularError("content division failed")
    return q


def curve_image(R: dict, p: int):
    """Squarefree part of R with both contents removed, leading term scaled to 1."""
    ctx = _ctx(p)
    f = ctx.from_dict(R)
    if f.is_zero():
        raise ModularError(f"resultant vanishes mod {p}")
    _, facs = f.factor_squarefree()
    g = ctx.from_dict({(0, 0): 1})
    for h, _m in facs:
        g *= h
    g = _content_free(_content_free(g, ctx, 0), ctx, 1)
    terms = dict(zip(g.monoms(), map(int, g.coeffs())))
    top = max(terms)
    inv = pow(terms[top], p - 2, p)
    return {k: v * inv % p for k, v in terms.items()}


@dataclass(frozen=True)
class ModularImage:
    p: int
    terms: dict

    @property
    def b(self):
        return max(i for i, _ in self.terms)

    @property
    def d(self):
        return max(i + j for i, j in self.terms)

    @property
    def signature(self):
        return (self.b, self.d, len(self.terms))


@dataclass
class ModularStats:
    b: int
    d: int
    terms: int
    primes: list
    agreeing: int
    images: list = field(default_factory=list, repr=False)

    @property
    def d_minus_b(self):
        return self.d - self.b

    def as_tuple(self):
        return (self.b, self.d - self.b, self.terms)

    def to_curve_stats(self, field_name="Q"):
        return CurveStats(self.b, self.d, self.terms, None, field_name)


def modular_image(sol_or_E, p: int, seed: int = 0, sign: int = 1) -> ModularImage:
    E = sol_or_E if isinstance(sol_or_E, Elimination) else Elimination.of(sol_or_E)
    r = sqrt_minus_one(p)
    if sign < 0:
        r = p - r
    rng = random.Random(f"{seed}:{p}:{sign}")
    R = resultant_image(E, p, r, rng)
    return ModularImage(p, curve_image(R, p))


def modular_curve_stats(sol: ParamSolution, nprimes: int = 3, seed: int = 0, max_primes: int = 8):
    """``b``, ``d`` and term count from ``nprimes`` agreeing prime images.

    The term count of an image can only drop (a coefficient vanishing mod p),
    so agreement of several primes leaves an error probability of roughly
    ``(terms / p) ** nprimes``.
    """
    E = Elimination.of(sol)
    tally = {}
    tried = []
    for p in primes_1mod4(max_primes):
        tried.append(p)
        try:
            img = modular_image(E, p, seed)
        except ModularError:
            continue
        tally.setdefault(img.signature, []).append(img)
        best = max(tally.values(), key=len)
        if len(best) >= nprimes:
            b, d, t = best[0].signature
            return ModularStats(b, d, t, [im.p for im in best], len(best), best)
    raise ModularError(f"no {nprimes} primes agree among {tried}: {sorted((k, len(v)) for k, v in tally.items())}")


def _mod_poly2(P: Poly2, ctx, p):
    d = {}
    for k, c in P.terms.items():
        if c.b:
            raise ModularError("homography maps are rational")
        d[k] = c.a.numerator * pow(c.a.denominator, p - 2, p) % p
    return ctx.from_dict(d)


_MAP_CACHE = {}


def _mod_maps(h, p):
    key = (h.index, p)
    if key not in _MAP_CACHE:
        ctx = _ctx(p)
        _MAP_CACHE[key] = [(_mod_poly2(a, ctx, p), _mod_poly2(b, ctx, p)) for a, b in h.poly_maps()]
    return _MAP_CACHE[key]


def homography_image_mod(img: ModularImage, h) -> ModularImage:
    """Image of a mod-p curve under a homography row, content removed and scaled."""
    p = img.p
    (un, ud), (xn, xd) = _mod_maps(h, p)
    ctx = _ctx(p)
    bu = img.b
    bx = max(j for _, j in img.terms)
    pw = {}

    def power(f, name, k):
        key = (name, k)
        if key not in pw:
            pw[key] = f**k
        return pw[key]

    out = ctx.from_dict({})
    for (i, j), c in img.terms.items():
        out += c * power(un, "un", i) * power(ud, "ud", bu - i) * power(xn, "xn", j) * power(xd, "xd", bx - j)
    terms = dict(zip(out.monoms(), map(int, out.coeffs())))
    return ModularImage(p, curve_image(terms, p))


# ---------------------------------------------------------------------------
# lifting to characteristic zero
# ---------------------------------------------------------------------------
def rational_reconstruct(a: int, m: int):
    """Fraction n/d = a (mod m) with |n|, d <= sqrt(m/2), or None."""
    a %= m
    bound = int((m // 2) ** 0.5)
    while (bound + 1) ** 2 <= m // 2:
        bound += 1
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    f = Fraction(r1, s1)
    if (f.numerator - a * f.denominator) % m:
        return None
    return f


def _crt(r1, m1, r2, m2):
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return r1 + m1 * t, m1 * m2


def reconstruct_curve(sol: ParamSolution, seed: int = 0, max_primes: int = 60, certify: bool = True) -> PlaneCurve:
    """Exact curve through the parametrization, recovered from prime images."""
    E = Elimination.of(sol)
    shape = None
    acc = None  # {(i, j): [re, im]}
    modulus = 1
    last = None
    for p in primes_1mod4(max_primes):
        try:
            plus = modular_image(E, p, seed, 1)
            minus = modular_image(E, p, seed, -1) if E.gaussian else plus
        except ModularError:
            continue
        key = sorted(set(plus.terms) | set(minus.terms))
        if shape is None or len(key) > len(shape):
            shape, acc, modulus, last = key, None, 1, None
        elif key != shape:
            continue  # unlucky prime
        r = sqrt_minus_one(p)
        inv2 = pow(2, p - 2, p)
        inv2r = pow(2 * r, p - 2, p)
        parts = {}
        for k in shape:
            cp, cm = plus.terms.get(k, 0), minus.terms.get(k, 0)
            parts[k] = ((cp + cm) * inv2 % p, (cp - cm) * inv2r % p)
        if acc is None:
            acc = {k: list(v) for k, v in parts.items()}
            modulus = p
        else:
            for k in shape:
                for c in (0, 1):
                    acc[k][c], _ = _crt(acc[k][c], modulus, parts[k][c], p)
            modulus *= p
        lifted = _lift(acc, modulus)
        if lifted is None:
            continue
        if lifted == last:
            poly = Poly2({k: (FieldScalar(a, b, -1) if b else FieldScalar(a)) for k, (a, b) in lifted.items() if a or b})
            curve = PlaneCurve(poly)
            if not certify or vanishes_on(curve, sol.x, sol.u):
                return curve
        last = lifted
    raise ModularError("reconstruction did not stabilize")


def _lift(acc, modulus):
    out = {}
    for k, (a, b) in acc.items():
        fa = rational_reconstruct(a, modulus)
        fb = rational_reconstruct(b, modulus)
        if fa is None or fb is None:
            return None
        out[k] = (fa, fb)
    return out


__all__ = [
    "Elimination", "ModularError", "ModularImage", "ModularStats",
    "curve_image", "homography_image_mod", "modular_curve_stats", "modular_image", "primes_1mod4",
    "rational_reconstruct", "reconstruct_curve", "resultant_image", "sqrt_minus_one",
]
