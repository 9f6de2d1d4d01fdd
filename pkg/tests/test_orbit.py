from fractions import Fraction as F

import pytest

from painleve6.catalog import parse_theta
from painleve6.orbit import canonical_theta, find_script, orbit_search
from painleve6.pvi import ThetaQuadruple
from painleve6.symmetry import run_script


def test_canonical_theta():
    th = ThetaQuadruple(F(-1, 7), F(1, 7), F(2, 7), F(1, 7))
    assert canonical_theta(th) == ThetaQuadruple(F(1, 7), F(1, 7), F(1, 7), F(2, 7))
    assert canonical_theta(canonical_theta(th)) == canonical_theta(th)


def test_find_script_reaches_former_theta(catalog):
    sol = catalog["I21"].solution("text")
    target = parse_theta("(3,1,2,1)/5")
    script = find_script(sol.theta, target)
    assert script is not None and script.count("ok") == 1
    assert run_script(sol, script).theta == target


def test_find_script_trivial_and_unreachable():
    th = parse_theta("(0,0,1,2)/5")
    assert find_script(th, th) == ""
    assert find_script(th, parse_theta("(1,1,1,1)/3"), max_okamoto=0) is None


def test_family_depth0(catalog):
    sol = catalog["II"].solution("text")
    res = orbit_search(sol, max_okamoto_depth=0)
    assert str(res.best.curve.poly) == "u^2-x"
    assert res.best.stats == (2, 2, 2)


def test_klein_is_minimal(catalog):
    sol = catalog["K"].solution("text")
    res = orbit_search(sol, max_okamoto_depth=1)
    b, d, t = res.best.stats
    assert (b, d - b, t) == (7, 1, 12)
    assert res.summary()["layers"][0]["members"] == 24 * 16


def test_deterministic(catalog):
    sol = catalog["I21"].solution("text")
    a = orbit_search(sol, max_okamoto_depth=1, seed=3).summary()
    b = orbit_search(sol, max_okamoto_depth=1, seed=3).summary()
    assert a == b


def test_rejects_non_solution(catalog):
    from painleve6.pvi import ParamSolution

    e = catalog["I21"]
    bad = ParamSolution(e.id, parse_theta("(1,0,1,2)/5"), e.x, e.u)
    with pytest.raises(ValueError):
        orbit_search(bad, max_okamoto_depth=0)
