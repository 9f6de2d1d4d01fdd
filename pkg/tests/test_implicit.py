import pytest

from painleve6.implicit import (
    ImplicitizationError,
    curve_stats,
    homography_image,
    implicitize,
    invariance_check,
    vanishes_on,
)
from painleve6.poly import PlaneCurve
from painleve6.symmetry import HOMOGRAPHIES, homography


def curve(text):
    return PlaneCurve.parse(text)


@pytest.mark.parametrize("eid,text", [
    ("II", "u^2-x"),
    ("III", "u^3-3*x*u+2*x"),
    ("IV", "u^4-2*u^3+2*x*u-x"),
    ("I21", "u^5-5*x*u^3+5*x*u^2-x^2"),
])
def test_published_curves(catalog, eid, text):
    assert implicitize(catalog[eid].solution()) == curve(text)


@pytest.mark.parametrize("eid,stats", [("K", (7, 1, 12)), ("I33", (12, 0, 24)), ("I27", (9, 0, 15))])
def test_stats(catalog, eid, stats):
    assert curve_stats(implicitize(catalog[eid].solution())).as_tuple() == stats


def test_non_monic_flag(catalog):
    assert not curve_stats(implicitize(catalog["I29"].solution())).monic_in_u
    assert curve_stats(implicitize(catalog["I21"].solution())).monic_in_u


def test_curve_vanishes_on_parametrization(catalog):
    e = catalog["I27"]
    P = implicitize(e.solution(), certify=False)
    assert vanishes_on(P, e.x, e.u)
    assert not vanishes_on(curve("u^2-x"), e.x, e.u)


def test_gaussian_routes_agree(catalog):
    sol = catalog["O13"].solution()
    P = implicitize(sol, method="modular")
    assert curve_stats(P).as_tuple() == (16, 2, 51)
    assert P == implicitize(sol, method="exact")


def test_constant_x_rejected(catalog):
    sol = catalog["II"].solution()
    with pytest.raises((ImplicitizationError, ValueError)):
        implicitize(sol.with_(x=sol.x * 0 + 2))


def test_invariance_examples(catalog):
    K = implicitize(catalog["K"].solution())
    assert invariance_check(K, homography(23))
    assert not invariance_check(K, homography(2))
    I33 = implicitize(catalog["I33"].solution())
    assert not any(invariance_check(I33, h) for k, h in HOMOGRAPHIES.items() if k != 1)


def test_homography_image_of_branch_count(catalog):
    P = implicitize(catalog["III"].solution())
    for h in HOMOGRAPHIES.values():
        assert homography_image(P, h).b == 3
