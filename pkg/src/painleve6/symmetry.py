"""Symmetries of PVI: sign changes, the 24 homographies, Okamoto, foldings."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .funcfield import FFElem
from .parser import evaluate, parse_tree
from .poly import Poly1, Poly2
from .pvi import ParamSolution, ThetaQuadruple

SLOT_LABELS = ("inf", "0", "1", "x")
_LABEL_INDEX = {"∞": 0, "inf": 0, "0": 1, "1": 2, "x": 3}


class TransformError(ValueError):
    pass


class FixedLocus(TransformError):
    """Okamoto map undefined: N = 0."""


class RiccatiLocus(TransformError):
    """Okamoto map undefined: W vanishes identically."""


# (index, order, slot labels, x map, u map as "a;b;c;d" for (a U + b)/(c U + d))
_TABLE = [
    (1, 1, "∞ 0 1 x", "X", "1;0;0;1"),
    (7, 2, "0 ∞ x 1", "X", "0;X;1;0"),
    (15, 2, "1 x ∞ 0", "X", "1;-X;1;-1"),
    (22, 2, "x 1 0 ∞", "X", "X;-X;1;-X"),
    (6, 2, "∞ x 1 0", "X/(X-1)", "1;-X;0;1-X"),
    (11, 2, "0 1 x ∞", "X/(X-1)", "-X;X;1-X;0"),
    (18, 2, "1 0 ∞ x", "X/(X-1)", "1;0;1;-1"),
    (20, 2, "x ∞ 0 1", "X/(X-1)", "0;-X;1;-X"),
    (2, 2, "∞ 0 x 1", "1/X", "1;0;0;X"),
    (8, 2, "0 ∞ 1 x", "1/X", "0;1;1;0"),
    (3, 2, "∞ 1 0 x", "1-X", "-1;1;0;1"),
    (23, 2, "x 0 1 ∞", "1-X", "1-X;0;1;-X"),
    (4, 3, "∞ 1 x 0", "1/(1-X)", "-1;1;0;1-X"),
    (10, 3, "0 x 1 ∞", "1/(1-X)", "1;-X;1-X;0"),
    (14, 3, "1 ∞ 0 x", "1/(1-X)", "0;1;-1;1"),
    (24, 3, "x 0 ∞ 1", "1/(1-X)", "1;0;1;-X"),
    (5, 3, "∞ x 0 1", "1-1/X", "-1;X;0;X"),
    (12, 3, "0 1 ∞ x", "1-1/X", "1;-1;1;0"),
    (17, 3, "1 0 x ∞", "1-1/X", "X-1;0;X;-X"),
    (19, 3, "x ∞ 1 0", "1-1/X", "0;1-X;1;-X"),
    (16, 4, "1 x 0 ∞", "1/X", "1;-X;X;-X"),
    (21, 4, "x 1 ∞ 0", "1/X", "1;-1;1;-X"),
    (9, 4, "0 x ∞ 1", "1-X", "1;-X;1;0"),
    (13, 4, "1 ∞ x 0", "1-X", "0;1-X;-1;1"),
]

# x = (alpha X + beta) / (gamma X + delta)
_X_MOBIUS = {
    "X": (1, 0, 0, 1),
    "X/(X-1)": (1, 0, 1, -1),
    "1/X": (0, 1, 1, 0),
    "1-X": (-1, 1, 0, 1),
    "1/(1-X)": (0, 1, -1, 1),
    "1-1/X": (1, -1, 1, 0),
}


def _lin(text: str) -> Poly1:
    tree = parse_tree(text, ("X",))
    return evaluate(tree, {"X": Poly1([0, 1], "X")}, lambda n: Poly1([n], "X"))


@dataclass(frozen=True)
class Homography:
    """A row ``(u, x) = f(U, X)``.

    ``perm[k]`` is the new slot taking the old exponent of slot ``k``:
    ``Theta[perm[k]] = theta[k]``.
    """

    index: int
    order: int
    labels: str
    perm: tuple
    x_mob: tuple
    u_mob: tuple  # Poly1 in X: a, b, c, d

    # forward map: old (u, x) from new (U, X) -----------------------------------
    def x_of(self, X):
        a, b, c, d = self.x_mob
        return (X * a + b) / (X * c + d)

    def u_of(self, U, X):
        a, b, c, d = (_peval(p, X) for p in self.u_mob)
        return (U * a + b) / (U * c + d)

    # inverse: new (U, X) from old (u, x) ----------------------------------------
    def X_of(self, x):
        a, b, c, d = self.x_mob
        return (x * d - b) / (x * (-c) + a)

    def U_of(self, u, x):
        X = self.X_of(x)
        a, b, c, d = (_peval(p, X) for p in self.u_mob)
        return (u * d - b) / (u * (-1) * c + a)

    def theta_image(self, theta: ThetaQuadruple) -> ThetaQuadruple:
        t = theta.as_tuple()
        out = [None] * 4
        for k, slot in enumerate(self.perm):
            out[slot] = t[k]
        return ThetaQuadruple(*out)

    def poly_maps(self):
        """``((un, ud), (xn, xd))`` as Poly2 in the new variables named (u, x)."""
        X = Poly2.x()
        U = Poly2.u()
        a, b, c, d = (_peval(p, X) for p in self.u_mob)
        xa, xb, xc, xd = self.x_mob
        return (U * a + b, U * c + d), (X * xa + xb, X * xc + xd)

    def apply_point(self, U, X):
        return self.u_of(U, X), self.x_of(X)

    def __str__(self):
        return f"h{self.index}"


def _peval(p: Poly1, X):
    """Evaluate a rational-coefficient Poly1 at any ring element X."""
    acc = X * 0
    for c in reversed(p.coeffs):
        acc = acc * X + (c.a if c.a.denominator != 1 else int(c.a))
    return acc


def _build():
    out = {}
    for idx, order, labels, xm, um in _TABLE:
        perm = tuple(_LABEL_INDEX[t] for t in labels.split())
        ums = tuple(_lin(p) for p in um.split(";"))
        out[idx] = Homography(idx, order, labels, perm, _X_MOBIUS[xm], ums)
    return out


HOMOGRAPHIES = _build()


def homography(index: int) -> Homography:
    try:
        return HOMOGRAPHIES[index]
    except KeyError:
        raise TransformError(f"no homography numbered {index}") from None


# ---------------------------------------------------------------------------
# group structure, checked numerically on exact rational points
# ---------------------------------------------------------------------------
_PROBES = [(Fraction(3, 7), Fraction(-5, 11)), (Fraction(13, 5), Fraction(2, 9)), (Fraction(-7, 3), Fraction(17, 4))]


def _point_action(h: Homography, pt):
    """Image of a point (U, X) under h, as a point (u, x)."""
    U, X = pt
    return h.apply_point(U, X)


def _signature(fn):
    return tuple(fn(p) for p in _PROBES)


@lru_cache(maxsize=None)
def _sig_table():
    return {_signature(lambda p, h=h: _point_action(h, p)): i for i, h in HOMOGRAPHIES.items()}


def compose(i: int, j: int) -> int:
    """Index k with ``h_k = h_i o h_j`` acting on points (U, X) -> (u, x)."""
    hi, hj = HOMOGRAPHIES[i], HOMOGRAPHIES[j]
    sig = _signature(lambda p: _point_action(hi, _point_action(hj, p)))
    try:
        return _sig_table()[sig]
    except KeyError:
        raise TransformError(f"h{i} o h{j} is not in the table") from None


def group_table() -> dict:
    return {(i, j): compose(i, j) for i in HOMOGRAPHIES for j in HOMOGRAPHIES}


def element_order(i: int) -> int:
    k, cur = 1, i
    while cur != 1:
        cur = compose(i, cur)
        k += 1
        if k > 24:
            raise TransformError("order exceeds group size")
    return k


def inverse(i: int) -> int:
    return next(j for j in HOMOGRAPHIES if compose(i, j) == 1)


def conjugate_rows(rows, h: int) -> list:
    """Rows fixing the image of a curve under ``h``, given the rows fixing the curve."""
    hi = inverse(h)
    return sorted(compose(compose(hi, g), h) for g in rows)


def check_group() -> dict:
    """Closure, identity, inverses, orders, and compatibility of the theta action."""
    table = group_table()
    ids = set(HOMOGRAPHIES)
    closed = set(table.values()) <= ids
    has_inverses = all(any(table[(i, j)] == 1 for j in ids) for i in ids)
    orders = {i: element_order(i) for i in HOMOGRAPHIES}
    mismatches = sorted((i, h.order, orders[i]) for i, h in HOMOGRAPHIES.items() if orders[i] != h.order)
    perms = {h.perm for h in HOMOGRAPHIES.values()}
    # theta action must be compatible with composition: the point map h_i o h_j
    # carries solutions with exponent permutation perm_j composed after perm_i
    theta_ok = True
    probe = ThetaQuadruple.of([1, 2, 3, 4])
    for (i, j), k in table.items():
        via = HOMOGRAPHIES[j].theta_image(HOMOGRAPHIES[i].theta_image(probe))
        if via != HOMOGRAPHIES[k].theta_image(probe):
            theta_ok = False
    return {
        "size": len(ids),
        "closed": closed,
        "inverses": has_inverses,
        "orders_match": not mismatches,
        "order_mismatches": mismatches,  # (row, printed, computed)
        "all_slot_permutations": len(perms) == 24,
        "theta_action_compatible": theta_ok,
    }


# ---------------------------------------------------------------------------
# actions on solutions
# ---------------------------------------------------------------------------
def apply_homography(h, sol: ParamSolution) -> ParamSolution:
    h = homography(h) if isinstance(h, int) else h
    X = h.X_of(sol.x)
    U = h.U_of(sol.u, sol.x)
    meta = dict(sol.meta)
    meta["history"] = tuple(meta.get("history", ())) + (f"h{h.index}",)
    return sol.with_(x=X, u=U, theta=h.theta_image(sol.theta), meta=meta)


def sign_change(mask, theta: ThetaQuadruple) -> ThetaQuadruple:
    """``mask``: four booleans or a string like ``"+--+"`` (``-`` flips)."""
    if isinstance(mask, str):
        if len(mask) != 4 or set(mask) - {"+", "-"}:
            raise TransformError(f"bad sign mask {mask!r}")
        mask = [c == "-" for c in mask]
    mask = list(mask)
    if len(mask) != 4:
        raise TransformError("sign mask needs four entries")
    return ThetaQuadruple(*(-t if f else t for t, f in zip(theta, mask)))


def apply_sign(mask, sol: ParamSolution) -> ParamSolution:
    meta = dict(sol.meta)
    text = mask if isinstance(mask, str) else "".join("-" if f else "+" for f in mask)
    meta["history"] = tuple(meta.get("history", ())) + (f"s{text}",)
    return sol.with_(theta=sign_change(mask, sol.theta), meta=meta)


SIGN_MASKS = tuple("".join(p) for p in itertools.product("+-", repeat=4))


def okamoto_theta(theta: ThetaQuadruple) -> ThetaQuadruple:
    """Theta_j = theta_j - (sum theta)/2 + 1/2 (an involution)."""
    t = theta.as_tuple()
    shift = Fraction(1, 2) - sum(t) / 2
    return ThetaQuadruple(*(v + shift for v in t))


def okamoto_N(theta: ThetaQuadruple) -> Fraction:
    return sum(theta.as_tuple()) - 1


def okamoto_apply(sol: ParamSolution) -> ParamSolution:
    theta = sol.theta
    N = okamoto_N(theta)
    Theta = okamoto_theta(theta)
    if N != sum(a - b for a, b in zip(theta, Theta)) / 2:  # pragma: no cover
        raise TransformError("N cross-check failed")
    if N == 0:
        raise FixedLocus("sum of theta equals 1: Okamoto map undefined")
    x, u = sol.x, sol.u
    xs = x.d_ds()
    if xs.is_zero():
        raise TransformError("x is constant")
    du_dx = u.d_ds() / xs
    _, t0, t1, tx = theta.as_tuple()
    W = x * (x - 1) * du_dx / (u * (u - 1) * (u - x)) + u.inverse() * t0 + (u - 1).inverse() * t1 + (u - x).inverse() * (tx - 1)
    if W.is_zero():
        raise RiccatiLocus("W vanishes identically")
    U = u - W.inverse() * N
    meta = dict(sol.meta)
    meta["history"] = tuple(meta.get("history", ())) + ("ok",)
    return sol.with_(u=U, theta=Theta, meta=meta)


def apply_quartic(sol: ParamSolution) -> ParamSolution:
    t = sol.theta.as_tuple()
    if len(set(t)) != 1:
        raise TransformError(f"quartic map needs four equal exponents, got {sol.theta}")
    lam = t[0]
    x, U = sol.x, sol.u
    num = U * U - x
    den = U * (U - 1) * (U - x) * 4
    if den.is_zero():
        raise TransformError("U lies in {0, 1, X}")
    u = num * num / den
    meta = dict(sol.meta)
    meta["history"] = tuple(meta.get("history", ())) + ("q4",)
    return sol.with_(u=u, theta=ThetaQuadruple(4 * lam, 0, 0, 0), meta=meta)


# ---------------------------------------------------------------------------
# transform scripts: "h8,ok,s+--+,q4"
# ---------------------------------------------------------------------------
def parse_script(script: str):
    steps = []
    for tok in (t.strip() for t in script.split(",")):
        if not tok:
            continue
        if tok == "ok" or tok == "q4":
            steps.append((tok, None))
        elif tok.startswith("h") and tok[1:].isdigit():
            steps.append(("h", homography(int(tok[1:]))))
        elif tok.startswith("s") and len(tok) == 5:
            sign_change(tok[1:], ThetaQuadruple(0, 0, 0, 0))
            steps.append(("s", tok[1:]))
        else:
            raise TransformError(f"unknown transform token {tok!r}")
    return steps


def run_script(sol: ParamSolution, script) -> ParamSolution:
    steps = parse_script(script) if isinstance(script, str) else script
    for kind, arg in steps:
        if kind == "h":
            sol = apply_homography(arg, sol)
        elif kind == "s":
            sol = apply_sign(arg, sol)
        elif kind == "ok":
            sol = okamoto_apply(sol)
        elif kind == "q4":
            sol = apply_quartic(sol)
    return sol


# ---------------------------------------------------------------------------
# genus-0 cleanup: move the pole of x of largest order to s = 0
# ---------------------------------------------------------------------------
def normalize_pole(sol: ParamSolution) -> ParamSolution:
    """Moebius change of s putting the highest-order rational pole of x at 0."""
    if sol.rad.count:
        return sol
    x = sol.x.c[0]
    poles = _rational_poles(x)
    if not poles:
        return sol
    where, _ = max(poles, key=lambda p: (p[1], p[0] is None, p[0] == 0))
    if where == 0:
        return sol
    if where is None:
        sub = _invert_s
    else:
        sub = lambda r, a=where: _shift_s(r, a)
    X = FFElem(sol.rad, sub(sol.x.c[0]))
    U = FFElem(sol.rad, sub(sol.u.c[0]))
    return sol.with_(x=X, u=U)


def _rational_poles(r):
    from flint import fmpq

    out = []
    num, den = r.degree_pair()
    if num > den:
        out.append((None, num - den))
    for f, e in r.d.factor()[1]:
        if f.degree() == 1:
            root = -f[0] / f[1]
            out.append((Fraction(int(root.p), int(root.q)) if isinstance(root, fmpq) else Fraction(root), e))
    return out


def _shift_s(r, a):
    from flint import fmpq, fmpq_poly

    from .ratfun import RatFun

    s_new = fmpq_poly([fmpq(a.numerator, a.denominator), 1])
    return RatFun(r.a(s_new), r.b(s_new) if r.b else None, r.d(s_new), r.m)


def _invert_s(r):
    from flint import fmpq_poly

    from .ratfun import RatFun

    n = max(r.a.degree(), r.b.degree() if r.b else -1, r.d.degree())

    def rev(p):
        cs = p.coeffs() + [0] * (n + 1 - len(p.coeffs()))
        return fmpq_poly(list(reversed(cs)))

    return RatFun(rev(r.a), rev(r.b) if r.b else None, rev(r.d), r.m)


# ---------------------------------------------------------------------------
# numeric check of the half-integer folding
# ---------------------------------------------------------------------------
def fold_point_check(folded: ParamSolution, unfolded_curve, samples: int = 20, precision: int = 256, seed: int = 1, homography_index: int | None = None):
    """Evaluate the folded solution, unfold numerically over all root branches,
    and test membership in ``unfolded_curve`` (a PlaneCurve).

    Returns a dict with per-sample minima and the overall verdict.
    """
    import mpmath

    old = mpmath.mp.prec
    mpmath.mp.prec = precision
    try:
        tol = mpmath.mpf(10) ** (-(precision // 4))
        rng = random.Random(seed)
        P = unfolded_curve.poly
        h = HOMOGRAPHIES[homography_index] if homography_index else None
        minima = []
        skipped = 0
        tries = 0
        while len(minima) < samples:
            tries += 1
            if tries > samples * 20:
                raise TransformError("too many poles hit while sampling")
            s0 = Fraction(rng.randint(-400, 400), rng.randint(1, 97))
            try:
                X, U = _eval_point(folded, s0)
            except ZeroDivisionError:
                skipped += 1
                continue
            if X == 0 or U == 0:
                skipped += 1
                continue
            best = None
            r4 = mpmath.root(X, 4)
            sU = mpmath.sqrt(U)
            for k in range(4):
                q = r4 * (1j) ** k
                qi = 1 / q
                x = ((qi + q) / 2) ** 2
                u = ((qi * sU + q / sU) / 2) ** 2
                if h is not None:
                    u, x = h.U_of(u, x), h.X_of(x)
                val = abs(_eval_curve(P, u, x))
                scale = 1 + sum(abs(_to_mp(c)) * abs(u) ** i * abs(x) ** j for (i, j), c in P.terms.items())
                val = val / scale
                best = val if best is None or val < best else best
            minima.append(best)
        worst = max(minima)
        return {
            "pass": bool(worst < tol),
            "samples": samples,
            "skipped": skipped,
            "precision": precision,
            "tolerance": tol,
            "worst": worst,
            "minima": minima,
        }
    finally:
        mpmath.mp.prec = old


def _to_mp(c):
    import mpmath

    re = mpmath.mpf(c.a.numerator) / c.a.denominator
    if c.b:
        return mpmath.mpc(re, mpmath.mpf(c.b.numerator) / c.b.denominator)
    return re


def _eval_curve(P: Poly2, u, x):
    acc = 0
    for (i, j), c in P.terms.items():
        acc += _to_mp(c) * u ** i * x ** j
    return acc


def _eval_point(sol: ParamSolution, s0: Fraction):
    """Big-float values of (x, u) at s = s0 with t_k = +sqrt(P_k(s0))."""
    import mpmath

    rad = sol.rad
    ts = []
    for P in rad.polys():
        v = sum(mpmath.mpf(int(c.p)) / int(c.q) * mpmath.mpf(s0.numerator) ** k / mpmath.mpf(s0.denominator) ** k for k, c in enumerate(P.coeffs()))
        ts.append(mpmath.sqrt(v))
    return _eval_ff(sol.x, s0, ts), _eval_ff(sol.u, s0, ts)


def _eval_ff(e: FFElem, s0: Fraction, ts):
    vals = []
    for comp in e.c:
        if not comp:
            vals.append(0)
            continue
        v = comp(s0)
        vals.append(_to_mp(v))
    t1 = ts[0] if ts else 0
    t2 = ts[1] if len(ts) > 1 else 0
    return vals[0] + vals[1] * t1 + vals[2] * t2 + vals[3] * t1 * t2
