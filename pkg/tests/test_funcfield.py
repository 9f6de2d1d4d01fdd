from flint import fmpq_poly

import pytest

from painleve6.funcfield import FFElem, RadicalError, RadicalSet, normalize_radical
from painleve6.ratfun import RatFun

S = fmpq_poly([0, 1])
P1 = fmpq_poly([0, 16, 37, 10])  # s (2s+1)(5s+16)
P2 = fmpq_poly([5, 2, 1])
R1 = RadicalSet(P1)
R2 = RadicalSet(P1, P2)


def rf(*coeffs):
    return RatFun.poly(fmpq_poly(list(coeffs)))


def test_t_squared_is_P():
    t = FFElem.t1(R1)
    assert t * t == FFElem(R1, RatFun.poly(P1))


def test_conjugate_product():
    R = RatFun(fmpq_poly([1, 1]), None, fmpq_poly([3, 0, 1]))
    t = FFElem.t1(R1)
    a = FFElem(R1, RatFun.const(1) / 2, R)
    b = FFElem(R1, RatFun.const(1) / 2, -R)
    assert a * (a - t * R * 2) == a * b
    assert a * b == FFElem(R1, RatFun.const(1) / 4 - R * R * RatFun.poly(P1))


def test_t1t2_squared():
    e = FFElem.t1(R2) * FFElem.t2(R2)
    assert e * e == FFElem(R2, RatFun.poly(P1 * P2))


def test_inverse_of_t():
    t = FFElem.t1(R1)
    assert t.inverse() == t * RatFun.poly(P1).inverse()


def test_inverse_conjugate_formula():
    R = rf(2, 1)
    a = FFElem(R1, RatFun.const(1) / 2, R)
    expect = FFElem(R1, RatFun.const(1) / 2, -R) * (RatFun.const(1) / 4 - R * R * RatFun.poly(P1)).inverse()
    assert a.inverse() == expect
    assert a * a.inverse() == FFElem.const(R1, 1)


def test_inverse_two_radicals():
    a = FFElem(R2, rf(1, 1), rf(0, 2), rf(3), rf(1))
    assert a * a.inverse() == FFElem.const(R2, 1)


def test_inverse_scalar_and_zero():
    assert FFElem.const(R1, 3).inverse() == FFElem(R1, RatFun.const(1) / 3)
    with pytest.raises(ZeroDivisionError):
        FFElem.const(R1, 0).inverse()


def test_derivative_of_cusp_radical():
    R = RadicalSet(fmpq_poly([0, 0, 0, 1]), check=False)
    t = FFElem.t1(R)
    assert t.d_ds() == t * RatFun(fmpq_poly([3]), None, fmpq_poly([0, 2]))


def test_derivative_polynomial():
    assert FFElem(R1, rf(0, 0, 1)).d_ds() == FFElem(R1, rf(0, 2))


def test_derivative_product_rule_form():
    R = rf(1, 0, 3)
    t = FFElem.t1(R1)
    lhs = (t * R).d_ds()
    dP = RatFun.poly(P1.derivative())
    rhs = t * (R.derivative() + R * dP / (RatFun.poly(P1) * 2))
    assert lhs == rhs


def test_mismatched_radicals():
    with pytest.raises(RadicalError):
        FFElem.t1(R1) + FFElem.t1(RadicalSet(P2))


def test_non_squarefree_rejected():
    with pytest.raises(RadicalError):
        RadicalSet(fmpq_poly([0, 0, 1, 1]))


def test_normalize_radical_pulls_squares():
    Q, scale = normalize_radical(P1 / 36)
    assert Q == P1 and scale == fmpq_poly([1]) / 6
    Q, scale = normalize_radical(fmpq_poly([0, 0, 0, -1]) * P2)
    assert Q * scale * scale == fmpq_poly([0, 0, 0, -1]) * P2
    assert Q.gcd(Q.derivative()).degree() == 0


def test_genus_claims():
    assert R1.genus_claims() == (1,)
    assert RadicalSet(fmpq_poly([1, 0, 0, 0, 0, 1])).genus_claims() == (2,)
