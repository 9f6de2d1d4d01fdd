"""Acceptance criteria 1-10.  Each test records its verdict; the terminal
summary prints one PASS/FAIL line per criterion."""

import time
from fractions import Fraction as F

import pytest
from conftest import ACCEPTANCE

from painleve6.catalog import parse_theta
from painleve6.certificates import radical_checks, space_curve_check, weierstrass_check
from painleve6.implicit import curve_stats, implicitize
from painleve6.modular import modular_curve_stats
from painleve6.orbit import canonical_theta, orbit_search
from painleve6.poly import PlaneCurve
from painleve6.pvi import ParamSolution, ThetaQuadruple, is_solution
from painleve6.report import invariant_homographies, verify_entry
from painleve6.reproduce import reproduce_row, tier
from painleve6.symmetry import HOMOGRAPHIES, check_group, fold_point_check, okamoto_theta, run_script


def record(n, ok, detail):
    prev_ok, prev = ACCEPTANCE.get(n, (True, ""))
    ACCEPTANCE[n] = (prev_ok and bool(ok), f"{prev}; {detail}" if prev else detail)


# -- 1 ----------------------------------------------------------------------
def test_c1_residuals(catalog):
    t0 = time.perf_counter()
    results = [verify_entry(e) for e in catalog]
    total = time.perf_counter() - t0
    bad = [r.id for r in results if not r.ok]
    fam = all(catalog[i].sample_count() == 2 for i in ("II", "III", "IV"))
    slow = [r.id for r in results if r.seconds > (300 if r.id in ("I49", "I50", "I51", "I52") else 60)]
    ok = not bad and fam and not slow and total < 600
    record(1, ok, f"{len(results) - len(bad)}/48 residual zero in {total:.1f}s")
    assert ok, (bad, slow)


# -- 2 ----------------------------------------------------------------------
@pytest.fixture(scope="module")
def exact_rows(catalog):
    return {e.id: reproduce_row(e) for e in catalog if tier(e) == "exact"}


@pytest.mark.parametrize("ident,stats", [("I21", (5, 0, 4)), ("K", (7, 1, 12)), ("I33", (12, 0, 24)),
                                         ("237", (18, 0, 54))])
def test_c2_examples(exact_rows, ident, stats):
    ok = exact_rows[ident].table == stats
    record(2, ok, f"{ident} {stats}" if ok else f"{ident} got {exact_rows[ident].table}")
    assert ok


def test_c2_all_exact_rows(catalog, exact_rows):
    eligible = [e.id for e in catalog if e.genus in ("0", "1") and e.b <= 20]
    missing = sorted(set(eligible) - set(exact_rows))
    bad = [i for i, r in exact_rows.items() if not r.ok]
    ok = not missing and not bad
    record(2, ok, f"{len(exact_rows) - len(bad)}/{len(exact_rows)} exact rows match")
    assert ok, (missing, bad)


# -- 3 ----------------------------------------------------------------------
@pytest.mark.parametrize("ident,bd", [("I47", (30, 2)), ("I49", (36, 0)), ("I50", (40, 6)), ("I52", (72, 6))])
def test_c3_modular(catalog, ident, bd):
    t0 = time.perf_counter()
    st = modular_curve_stats(catalog[ident].solution("text"))
    got = (int(st.b), int(st.d) - int(st.b))
    ok = got == bd and len(st.primes) >= 3 and time.perf_counter() - t0 < 900
    record(3, ok, f"{ident} {got} on {len(st.primes)} primes")
    assert ok


def test_c3_all_large_rows(catalog):
    rows = [reproduce_row(e) for e in catalog if e.b > 20]
    bad = [r.id for r in rows if not r.ok]
    record(3, not bad, f"{len(rows) - len(bad)}/{len(rows)} rows with b>20")
    assert not bad


# -- 4 ----------------------------------------------------------------------
def test_c4_worked_example(catalog):
    start = run_script(catalog["I21"].solution("text"), "h23,ok")
    assert start.theta == parse_theta("(3,1,2,1)/5")
    res = orbit_search(start, max_okamoto_depth=2)
    b, d, terms = res.best.stats
    want = PlaneCurve.parse("u^5-5*x*u^3+5*x*u^2-x^2")
    ok = res.best.curve == want and b == d == 5 and terms == 4
    record(4, ok, f"depth 2 gives {res.best.curve} via {res.best.script or 'start'}")
    assert ok


# -- 5 ----------------------------------------------------------------------
def test_c5_closure():
    g = check_group()
    ok = g["size"] == 24 and g["closed"] and g["inverses"] and g["theta_action_compatible"]
    record(5, ok, "24 rows close into a group")
    assert ok


def test_c5_okamoto_involution():
    import random

    rng = random.Random(5)
    quads = [ThetaQuadruple(*(F(rng.randint(-30, 30), rng.randint(1, 30)) for _ in range(4))) for _ in range(100)]
    ok = all(okamoto_theta(okamoto_theta(q)) == q for q in quads)
    record(5, ok, "okamoto involution on 100 quadruples")
    assert ok


@pytest.mark.xfail(strict=True, reason="printed order 2 for rows 11 and 20; both have order 4 (ledger)")
def test_c5_printed_orders():
    g = check_group()
    detail = ", ".join(f"row {i} printed {p} computed {c}" for i, p, c in g["order_mismatches"])
    record(5, g["orders_match"], f"order column: {detail or 'all match'}")
    assert g["orders_match"]


# -- 6 ----------------------------------------------------------------------
@pytest.mark.parametrize("ident,rows", [("O13", list(range(2, 25))), ("I33", []), ("K", [6, 8, 10, 19, 23]),
                                        ("I41", [3, 8, 12, 14, 18])])
def test_c6_invariance(catalog, ident, rows):
    e = catalog[ident]
    got = sorted(invariant_homographies(implicitize(e.solution("text"))))
    ok = got == rows == sorted(e.homographies)
    label = "all" if len(rows) == 23 else (",".join(map(str, rows)) or "none")
    record(6, ok, f"{ident} {label}")
    assert ok


# -- 7 ----------------------------------------------------------------------
def test_c7_quartic(catalog):
    folded = run_script(catalog["O13"].solution("text"), "q4")
    shape = canonical_theta(folded.theta) == ThetaQuadruple(0, 0, 0, F(1, 2))
    img = run_script(folded, "h19")
    curve = implicitize(img)
    ok = is_solution(folded) and shape and curve == PlaneCurve.parse("u^4-2*u^3+2*x*u-x")
    record(7, ok, f"O13 q4 theta {folded.theta}, h19 curve {curve}")
    assert ok


# -- 8 ----------------------------------------------------------------------
@pytest.fixture(scope="module")
def fold_inputs(catalog):
    e = catalog["III"]
    unfolded = ParamSolution(e.id, parse_theta(e.theta_text, {"a": 0}), e.x, e.u)
    return catalog["T06"].solution("text"), implicitize(unfolded)


def test_c8_fold_passes(fold_inputs):
    folded, curve = fold_inputs
    res = fold_point_check(folded, curve, samples=20, precision=256, homography_index=8)
    ok = res["pass"] and res["samples"] == 20 and float(res["tolerance"]) <= 1.000001e-64
    record(8, ok, f"T06 vs III(a=0) after h8 worst {float(res['worst']):.1e}")
    assert ok


def test_c8_negative_control(fold_inputs):
    folded, _ = fold_inputs
    control = PlaneCurve.parse("u^2-x")
    passes = [k for k in [None] + list(HOMOGRAPHIES)
              if fold_point_check(folded, control, samples=20, precision=256, homography_index=k)["pass"]]
    record(8, not passes, "u^2-x control fails for every row" if not passes else f"control passes {passes}")
    assert not passes


# -- 9 ----------------------------------------------------------------------
def test_c9_radicals(catalog):
    checks = radical_checks(catalog)
    bad = [r.id for r in checks if not r.ok]
    record(9, not bad, f"{len(checks) - len(bad)}/{len(checks)} single radicals")
    assert not bad


def test_c9_weierstrass(catalog):
    w = weierstrass_check(catalog["I36"], g2=-7788, g3=432856)
    record(9, w.ok, f"I36 g2=-7788 g3=432856 ({w.convention} sign)")
    assert w.ok


def test_c9_space_curves(catalog):
    res = {i: space_curve_check(catalog[i]).ok for i in ("I50", "I51", "I52")}
    ok = all(res.values())
    record(9, ok, "space curves I50/I51/I52")
    assert ok


# -- 10 ---------------------------------------------------------------------
def test_c10_properties():
    import test_properties as tp

    tp.COUNTS.clear()
    for fn in tp.PROPERTIES:
        fn()
    total = sum(tp.COUNTS.values())
    names = {"field axioms Q(i)", "field axioms Q(s)", "Leibniz Q(s)", "Leibniz one radical",
             "Okamoto involution", "sign involution", "b invariant under homographies"}
    ok = total >= 1000 and names <= set(tp.COUNTS)
    record(10, ok, f"{total} randomized cases over {len(tp.COUNTS)} properties")
    assert ok
