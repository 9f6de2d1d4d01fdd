from fractions import Fraction as F

import pytest

from painleve6.catalog import parse_theta
from painleve6.implicit import curve_stats, implicitize, invariance_check
from painleve6.poly import PlaneCurve
from painleve6.pvi import ThetaQuadruple, is_solution
from painleve6.symmetry import (
    HOMOGRAPHIES,
    FixedLocus,
    TransformError,
    apply_homography,
    apply_quartic,
    apply_sign,
    check_group,
    compose,
    element_order,
    fold_point_check,
    homography,
    okamoto_apply,
    okamoto_theta,
    parse_script,
    run_script,
    sign_change,
)


def test_group_closure_and_inverses():
    g = check_group()
    assert g["size"] == 24 and g["closed"] and g["inverses"]
    assert g["all_slot_permutations"] and g["theta_action_compatible"]


def test_order_census_is_S4():
    orders = sorted(element_order(i) for i in HOMOGRAPHIES)
    assert orders == [1] + [2] * 9 + [3] * 8 + [4] * 6


def test_identity_row():
    assert all(compose(1, k) == k == compose(k, 1) for k in HOMOGRAPHIES)


def test_identity_action(catalog):
    sol = catalog["I21"].solution()
    out = apply_homography(1, sol)
    assert out.x == sol.x and out.u == sol.u and out.theta == sol.theta


def test_h8_on_I21(catalog):
    sol = catalog["I21"].solution()
    out = apply_homography(8, sol)
    assert out.theta == parse_theta("(0,0,1,2)/5")
    P = implicitize(sol)
    assert invariance_check(P, homography(8))


def test_h3_fixes_I41(catalog):
    P = implicitize(catalog["I41"].solution())
    assert invariance_check(P, homography(3))


@pytest.mark.parametrize("k", sorted(HOMOGRAPHIES))
def test_homographies_preserve_residual_K(catalog, k):
    assert is_solution(apply_homography(k, catalog["K"].solution()))


def test_okamoto_theta_examples():
    assert okamoto_theta(parse_theta("(1,1,2,1)/7")) == parse_theta("(2,2,3,2)/7")
    t = ThetaQuadruple(F(1, 3), F(1, 3), F(1, 5), F(1, 5))
    assert okamoto_theta(t) == ThetaQuadruple(F(3, 10), F(3, 10), F(1, 6), F(1, 6))


def test_okamoto_on_II(catalog):
    sol = catalog["II"].solution("table", 0)
    out = okamoto_apply(sol)
    assert out.theta == ThetaQuadruple(F(3, 10), F(3, 10), F(1, 6), F(1, 6))
    assert out.u == -sol.u
    assert implicitize(out) == PlaneCurve.parse("u^2-x")
    assert implicitize(okamoto_apply(out)) == implicitize(sol)


def test_okamoto_fixed_locus(catalog):
    sol = catalog["I21"].solution()
    with pytest.raises(FixedLocus):
        okamoto_apply(sol.with_(theta=parse_theta("(1,1,1,2)/5")))


def test_I21_former_form_simplifies(catalog):
    start = run_script(catalog["I21"].solution(), "h23,ok")
    assert start.theta == parse_theta("(3,1,2,1)/5")
    assert curve_stats(implicitize(start)).as_tuple() == (5, 1, 12)
    back = run_script(start, "ok,h23")
    assert back.theta == parse_theta("(0,0,1,2)/5")
    assert implicitize(back) == PlaneCurve.parse("u^5-5*x*u^3+5*x*u^2-x^2")


def test_quartic_on_O12(catalog):
    out = apply_quartic(catalog["O12"].solution())
    assert out.theta == ThetaQuadruple(F(1, 3), 0, 0, 0)
    assert sorted(out.theta) == sorted(catalog["I41"].theta())
    assert is_solution(out)


def test_quartic_needs_equal_exponents(catalog):
    with pytest.raises(TransformError):
        apply_quartic(catalog["K"].solution())


def test_sign_change_examples():
    t = parse_theta("(1,1,2,1)/7")
    assert sign_change("++++", t) == t
    assert sign_change("----", t) == parse_theta("(-1,-1,-2,-1)/7")
    assert sign_change("+-+-", sign_change("+-+-", t)) == t


def test_sign_leaves_curve(catalog):
    sol = catalog["K"].solution()
    out = apply_sign("-+-+", sol)
    assert out.x == sol.x and out.u == sol.u and is_solution(out)


def test_script_tokens():
    steps = parse_script("h8, ok,s+--+,q4")
    assert [k for k, _ in steps] == ["h", "ok", "s", "q4"]
    for bad in ("h99", "x1", "s+-"):
        with pytest.raises(TransformError):
            parse_script(bad)


def test_fold_O10_to_IV(catalog):
    curve = implicitize(catalog["IV"].solution())
    res = fold_point_check(catalog["O10"].solution(), curve, samples=6, precision=256, homography_index=8)
    assert res["pass"], res["worst"]


def test_fold_negative_control(catalog):
    res = fold_point_check(catalog["T06"].solution(), PlaneCurve.parse("u^2-x"), samples=4)
    assert not res["pass"]
