"""Structural certificates attached to catalog entries.

* radical checks: each single radical is squarefree and its hyperelliptic
  genus ``ceil(deg/2) - 1`` equals the entry's genus tag;
* Weierstrass data: substituting ``s(w)``, ``t = c*wp`` into ``t^2 = P(s)``
  must produce ``wp^2 = 4 w^3 - g2 w - g3``;
* space curves: the radicands pulled back to the ``(p, q)`` curve agree with
  the squares of the stated ``t1, t2`` modulo the defining relation.

Everything is exact (flint rationals and multivariate polynomials).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from flint import fmpq, fmpq_mpoly_ctx, fmpq_poly

from .catalog import CatalogEntry
from .parser import evaluate, parse_expr, parse_tree


class CertificateError(ValueError):
    pass


# ---------------------------------------------------------------------------
# radicals
# ---------------------------------------------------------------------------
def _radicand(text: str) -> fmpq_poly:
    r = parse_expr(text)
    if not (r.is_poly() and r.is_real()):
        raise CertificateError(f"radicand {text!r} is not a rational polynomial")
    return r.a


@dataclass(frozen=True)
class RadicalCheck:
    id: str
    degree: int
    squarefree: bool
    genus: int
    expected: int | None

    @property
    def ok(self):
        return self.squarefree and self.genus == self.expected


def radical_check(entry: CatalogEntry) -> RadicalCheck:
    if len(entry.radicals) != 1:
        raise CertificateError(f"{entry.id} does not have exactly one radical")
    P = _radicand(entry.radicals[0])
    deg = P.degree()
    sqf = P.gcd(P.derivative()).degree() == 0
    genus = (deg + 1) // 2 - 1
    tag = entry.genus
    expected = int(tag.lstrip("HN")) if tag[-1].isdigit() else None
    return RadicalCheck(entry.id, deg, sqf, genus, expected)


def radical_checks(catalog):
    return [radical_check(e) for e in catalog if len(e.radicals) == 1]


# ---------------------------------------------------------------------------
# Weierstrass form
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class WeierstrassCheck:
    """``g2, g3`` in the classical normalization ``wp^2 = 4w^3 - g2 w - g3``.

    Stated constants are accepted in either sign convention; ``convention``
    says which one matched ("classical" or "flipped", i.e. ``4w^3 + g2 w + g3``).
    """

    id: str
    g2: Fraction | None
    g3: Fraction | None
    normal_form: bool
    stated: tuple | None
    convention: str | None = None

    @property
    def ok(self):
        if not self.normal_form:
            return False
        return self.stated is None or self.convention is not None


def _fq(v) -> Fraction:
    v = fmpq(v)
    return Fraction(int(v.p), int(v.q))


def weierstrass_invariants(radicand: str, s_text: str, t_text: str):
    """Classical ``(g2, g3)`` of the pulled-back cubic, or None if not in normal form."""
    w = fmpq_poly([0, 1])
    s_of_w = evaluate(parse_tree(s_text, ("w",)), {"w": w}, fmpq_poly)
    scale = evaluate(parse_tree(t_text, ("wp",)), {"wp": fmpq(1)}, fmpq)
    P = _radicand(radicand)
    cubic = P(s_of_w) / (scale * scale)
    c = [cubic[k] for k in range(4)]
    if cubic.degree() != 3 or c[3] != 4 or c[2] != 0:
        return None
    return _fq(-c[1]), _fq(-c[0])


def weierstrass_check(entry: CatalogEntry, g2=None, g3=None) -> WeierstrassCheck:
    """Check ``entry``'s Weierstrass substitution; explicit g2/g3 override the stored ones."""
    data = entry.weierstrass
    if not data or len(entry.radicals) != 1:
        raise CertificateError(f"{entry.id} has no Weierstrass data")
    inv = weierstrass_invariants(entry.radicals[0], data["s"], data["t"])
    if g2 is None and "g2" in data:
        g2, g3 = Fraction(data["g2"]), Fraction(data["g3"])
    stated = None if g2 is None else (Fraction(g2), Fraction(g3))
    if inv is None:
        return WeierstrassCheck(entry.id, None, None, False, stated)
    conv = None
    if stated is not None:
        if stated == inv:
            conv = "classical"
        elif stated == (-inv[0], -inv[1]):
            conv = "flipped"
    return WeierstrassCheck(entry.id, inv[0], inv[1], True, stated, conv)


# ---------------------------------------------------------------------------
# space curves
# ---------------------------------------------------------------------------
class _Frac:
    """Quotient of two fmpq_mpoly with gcd reduction."""

    __slots__ = ("n", "d")

    def __init__(self, n, d=None):
        if d is None:
            d = n.context().from_dict({(0,) * n.context().nvars(): 1})
        g = n.gcd(d)
        if not g.is_one():
            n, d = n / g, d / g
        self.n, self.d = n, d

    @staticmethod
    def lift(v, ctx):
        return v if isinstance(v, _Frac) else _Frac(ctx.from_dict({(0,) * ctx.nvars(): v}))

    def _ctx(self):
        return self.n.context()

    def __add__(self, o):
        o = _Frac.lift(o, self._ctx())
        return _Frac(self.n * o.d + o.n * self.d, self.d * o.d)

    __radd__ = __add__

    def __neg__(self):
        return _Frac(-self.n, self.d)

    def __sub__(self, o):
        return self + (-_Frac.lift(o, self._ctx()))

    def __rsub__(self, o):
        return _Frac.lift(o, self._ctx()) - self

    def __mul__(self, o):
        o = _Frac.lift(o, self._ctx())
        return _Frac(self.n * o.n, self.d * o.d)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _Frac.lift(o, self._ctx())
        if o.n.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return _Frac(self.n * o.d, self.d * o.n)

    def __rtruediv__(self, o):
        return _Frac.lift(o, self._ctx()) / self

    def __pow__(self, k):
        return _Frac(self.n**k, self.d**k)


def _divides(g, f) -> bool:
    if f.is_zero():
        return True
    _, r = divmod(f, g)
    return r.is_zero()


@dataclass
class SpaceCurveCheck:
    id: str
    identities: dict = field(default_factory=dict)  # label -> bool

    @property
    def ok(self):
        return bool(self.identities) and all(self.identities.values())


def space_curve_check(entry: CatalogEntry, tamper: str | None = None) -> SpaceCurveCheck:
    """Verify ``t_k^2 = P_k(s)`` on the stated (p, q) curve.

    ``tamper`` replaces the first relation (negative controls).
    """
    sc = entry.space_curve
    if not sc:
        raise CertificateError(f"{entry.id} has no space-curve data")
    ctx = fmpq_mpoly_ctx.get(("p", "q"), "lex")
    p, q = (_Frac(g) for g in ctx.gens())
    env = {"p": p, "q": q}

    def const(v):
        return _Frac.lift(v, ctx)

    def ev(text):
        return evaluate(parse_tree(text, env.keys()), env, const)

    for name, text in (sc.get("defs") or {}).items():
        env[name] = ev(text)
    relations = list(sc["relations"])
    if tamper is not None:
        relations[0] = tamper
    G = [ev(r).n for r in relations]
    if len(G) != 1:
        raise CertificateError("only principal relation ideals are supported")
    G = G[0]

    def on_curve(f: _Frac):
        if _divides(G, f.d):
            raise CertificateError("denominator vanishes on the curve")
        return _divides(G, f.n)

    s = ev(sc["s"])
    env["s"] = s
    out = SpaceCurveCheck(entry.id)
    for k, rad in enumerate(entry.radicals, start=1):
        t = ev(sc[f"t{k}"])
        Pk = evaluate(parse_tree(rad), {"s": s}, const)
        out.identities[f"t{k}^2 = P{k}(s)"] = on_curve(t * t - Pk)
    for text in sc.get("consequences", []):
        out.identities[text] = on_curve(ev(text))
    return out


__all__ = [
    "CertificateError", "RadicalCheck", "SpaceCurveCheck", "WeierstrassCheck",
    "radical_check", "radical_checks", "space_curve_check", "weierstrass_check",
    "weierstrass_invariants",
]
