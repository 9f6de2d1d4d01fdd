from fractions import Fraction

import pytest

from painleve6.certificates import (
    CertificateError,
    radical_check,
    radical_checks,
    space_curve_check,
    weierstrass_check,
)


def test_single_radicals(catalog):
    checks = radical_checks(catalog)
    assert len(checks) == 22
    for r in checks:
        assert r.squarefree, r.id
        assert r.genus == r.expected, r.id


def test_radical_degrees(catalog):
    assert radical_check(catalog["I27"]).degree == 3
    assert radical_check(catalog["I47"]).genus == 2
    assert radical_check(catalog["I49"]).genus == 3


def test_two_radicals_refused(catalog):
    with pytest.raises(CertificateError):
        radical_check(catalog["I50"])


def test_i36_weierstrass(catalog):
    w = weierstrass_check(catalog["I36"])
    assert w.ok and w.convention == "flipped"
    assert (w.g2, w.g3) == (7788, -432856)


def test_wrong_g3_fails(catalog):
    w = weierstrass_check(catalog["I36"], g2=-7788, g3=432857)
    assert not w.ok


def test_unstated_constants_pass(catalog):
    w = weierstrass_check(catalog["I27"])
    assert w.ok and w.stated is None
    assert (w.g2, w.g3) == (Fraction(889, 12), Fraction(-24013, 216))


@pytest.mark.parametrize("ident", ["I50", "I51", "I52"])
def test_space_curves(catalog, ident):
    assert space_curve_check(catalog[ident]).ok


def test_space_curve_tamper(catalog):
    rel = catalog["I50"].space_curve["relations"][0]
    bad = space_curve_check(catalog["I50"], tamper=f"({rel})+p")
    assert not bad.ok
