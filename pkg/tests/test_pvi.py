from fractions import Fraction as F

import pytest

from painleve6.catalog import parse_theta
from painleve6.funcfield import NO_RADICALS, FFElem
from painleve6.pvi import (
    DegenerateParametrization,
    ParamSolution,
    SingularSolution,
    ThetaQuadruple,
    is_solution,
    pvi_residual,
    theta_to_coeffs,
)


def test_coeffs_picard_point():
    assert theta_to_coeffs(ThetaQuadruple(0, 0, 0, 0)) == (0, 0, 0, F(1, 2))


def test_coeffs_klein():
    assert theta_to_coeffs(parse_theta("(1,1,2,1)/7")) == (F(1, 98), F(-1, 98), F(2, 49), F(24, 49))


def test_coeffs_sign_blind():
    t = parse_theta("(1,-1,2,-1)/7")
    assert theta_to_coeffs(t) == theta_to_coeffs(parse_theta("(1,1,2,1)/7"))


def test_II_residual(catalog):
    sol = catalog["II"].solution("table", 0)
    assert sol.theta == ThetaQuadruple(F(1, 3), F(1, 3), F(1, 5), F(1, 5))
    assert pvi_residual(sol).is_zero()


def test_genus_one_residual_components(catalog):
    r = pvi_residual(catalog["I27"].solution())
    assert all(c.is_zero() for c in r.c)


def test_wrong_theta_breaks_residual(catalog):
    sol = catalog["I21"].solution()
    assert is_solution(sol)
    assert not is_solution(sol, parse_theta("(1,0,1,2)/5"))


def test_residual_sign_invariant(catalog):
    sol = catalog["K"].solution()
    a = pvi_residual(sol, parse_theta("(1,1,2,1)/7"), cleared=False)
    b = pvi_residual(sol, parse_theta("(-1,1,-2,1)/7"), cleared=False)
    assert a == b


def test_raw_and_cleared_agree_on_zero(catalog):
    sol = catalog["I21"].solution()
    assert pvi_residual(sol, cleared=False).is_zero()
    bad = parse_theta("(1,0,1,2)/5")
    assert not pvi_residual(sol, bad, cleared=False).is_zero()


def test_degenerate_inputs():
    s = FFElem.s(NO_RADICALS)
    one = FFElem.const(NO_RADICALS, 1)
    th = ThetaQuadruple(0, 0, 0, 0)
    with pytest.raises(DegenerateParametrization):
        pvi_residual(ParamSolution("c", th, one * 3, s))
    with pytest.raises(SingularSolution):
        pvi_residual(ParamSolution("c", th, s, s))
