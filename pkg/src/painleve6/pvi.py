"""The sixth Painleve equation: monodromy exponents and the exact residual."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable

from .funcfield import FFElem

SLOTS = ("inf", "0", "1", "x")


class DegenerateParametrization(ValueError):
    pass


class SingularSolution(ValueError):
    pass


@dataclass(frozen=True)
class ThetaQuadruple:
    """Ordered exponents (theta_inf, theta_0, theta_1, theta_x)."""

    th_inf: Fraction
    th_0: Fraction
    th_1: Fraction
    th_x: Fraction

    def __post_init__(self):
        for name in ("th_inf", "th_0", "th_1", "th_x"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def of(cls, values: Iterable, scale=1) -> "ThetaQuadruple":
        vals = [Fraction(v) / Fraction(scale) for v in values]
        if len(vals) != 4:
            raise ValueError("a theta quadruple has four entries")
        return cls(*vals)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.th_inf, self.th_0, self.th_1, self.th_x)

    def __iter__(self):
        return iter(self.as_tuple())

    def __getitem__(self, k):
        return self.as_tuple()[k]

    def squares(self) -> tuple[Fraction, ...]:
        return tuple(v * v for v in self)

    def __str__(self):
        vals = self.as_tuple()
        den = 1
        for v in vals:
            den = den * v.denominator // _gcd(den, v.denominator)
        nums = ",".join(str(int(v * den)) for v in vals)
        return f"({nums})" if den == 1 else f"({nums})/{den}"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def theta_to_coeffs(theta: ThetaQuadruple) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(alpha, beta, gamma, delta) from (2a, -2b, 2g, 1-2d) = squares of theta."""
    ti, t0, t1, tx = theta.squares()
    return ti / 2, -t0 / 2, t1 / 2, (1 - tx) / 2


@dataclass(frozen=True)
class ParamSolution:
    """A parametric algebraic solution (x(s,t), u(s,t)) with its exponents."""

    id: str
    theta: ThetaQuadruple
    x: FFElem
    u: FFElem
    genus_claim: object = None
    family_params: tuple = ()
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.x.rad != self.u.rad:
            raise ValueError("x and u must share one radical set")

    @property
    def rad(self):
        return self.x.rad

    def with_(self, **changes) -> "ParamSolution":
        return replace(self, **changes)


def _check_solution(x: FFElem, u: FFElem, xs: FFElem):
    if xs.is_zero():
        raise DegenerateParametrization("dx/ds vanishes identically")
    for bad, name in ((u, "u = 0"), (u - 1, "u = 1"), (u - x, "u = x")):
        if bad.is_zero():
            raise SingularSolution(f"{name} identically")


def pvi_residual(sol: ParamSolution, theta: ThetaQuadruple | None = None, cleared: bool = True) -> FFElem:
    """Residual of PVI along ``sol``; zero exactly when it is a solution.

    With ``cleared=True`` the residual is multiplied by
    ``2 x^2 (x-1)^2 u (u-1) (u-x) (dx/ds)^3`` so that it is a polynomial
    expression in x, u and their s-derivatives.  Otherwise LHS - RHS itself
    is returned.
    """
    theta = sol.theta if theta is None else theta
    x, u = sol.x, sol.u
    xs = x.d_ds()
    _check_solution(x, u, xs)
    us = u.d_ds()
    xss = xs.d_ds()
    uss = us.d_ds()

    ti2, t02, t12, tx2 = theta.squares()
    x1 = x - 1
    u1 = u - 1
    ux = u - x
    xx1 = x * x1
    uu1 = u * u1
    uu1ux = uu1 * ux
    xx1_sq = xx1 * xx1
    xs2 = xs * xs

    lhs = xx1_sq * uu1ux * (uss * xs - us * xss) * 2
    quad = xx1_sq * (u1 * ux + u * ux + uu1) * (us * us) * xs
    lin = xx1 * uu1 * (x1 * ux + x * ux + xx1) * us * xs2 * 2
    u_sq = u * u
    u1_sq = u1 * u1
    ux_sq = ux * ux
    bracket = (
        u_sq * u1_sq * ux_sq * ti2
        - x * u1_sq * ux_sq * t02
        + x1 * u_sq * ux_sq * t12
        + xx1 * u_sq * u1_sq * (1 - tx2)
    )
    res = lhs - quad + lin - bracket * (xs2 * xs)
    if cleared:
        return res
    return res / (xx1_sq * uu1ux * xs2 * xs * 2)


def is_solution(sol: ParamSolution, theta: ThetaQuadruple | None = None) -> bool:
    return pvi_residual(sol, theta).is_zero()
