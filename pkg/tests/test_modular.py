from fractions import Fraction

import pytest

from painleve6.implicit import implicitize
from painleve6.modular import (
    homography_image_mod,
    modular_curve_stats,
    modular_image,
    primes_1mod4,
    rational_reconstruct,
    reconstruct_curve,
    sqrt_minus_one,
)
from painleve6.symmetry import homography


def test_primes():
    ps = primes_1mod4(4)
    assert len(set(ps)) == 4
    assert all(p % 4 == 1 and p < 2**31 for p in ps)
    for p in ps:
        r = sqrt_minus_one(p)
        assert r * r % p == p - 1


@pytest.mark.parametrize("q", [Fraction(0), Fraction(-7, 3), Fraction(12345, 678)])
def test_rational_reconstruction(q):
    m = primes_1mod4(1)[0]
    a = q.numerator * pow(q.denominator, -1, m) % m
    assert rational_reconstruct(a, m) == q


def test_II(catalog):
    st = modular_curve_stats(catalog["II"].solution())
    assert (st.b, st.d) == (2, 2)


def test_O13_branch_count(catalog):
    assert modular_curve_stats(catalog["O13"].solution()).b == 16


def test_I44_branch_count(catalog):
    st = modular_curve_stats(catalog["I44"].solution())
    assert st.b == 20 and len(st.primes) >= 3


@pytest.mark.parametrize("eid", ["I21", "K", "I33"])
def test_modular_matches_exact(catalog, eid):
    sol = catalog[eid].solution()
    P = implicitize(sol, method="exact")
    st = modular_curve_stats(sol)
    assert (st.b, st.d, st.terms) == (P.b, P.d, P.n_terms)


def test_image_of_homography_matches_exact(catalog):
    sol = catalog["K"].solution()
    h = homography(2)
    img = homography_image_mod(modular_image(sol, primes_1mod4(1)[0]), h)
    from painleve6.implicit import homography_image

    Q = homography_image(implicitize(sol), h)
    assert img.signature == (Q.b, Q.d, Q.n_terms)


def test_reconstruct_K(catalog):
    sol = catalog["K"].solution()
    assert reconstruct_curve(sol) == implicitize(sol, method="exact")


def _genus0_small():
    from painleve6.catalog import load_catalog

    return [e.id for e in load_catalog() if e.genus == "0" and e.b <= 12]


@pytest.mark.parametrize("eid", _genus0_small())
def test_exact_and_modular_agree_genus0(catalog, eid):
    sol = catalog[eid].solution()
    P = implicitize(sol, method="exact")
    img = modular_image(sol, primes_1mod4(1)[0])
    assert img.signature == (P.b, P.d, P.n_terms)
