import pytest
from flint import fmpq_poly

from painleve6.funcfield import FFElem, RadicalSet
from painleve6.parser import ParseError, parse_expr, parse_tree, to_text
from painleve6.ratfun import RatFun


def test_rational_expression():
    r = parse_expr("(3*s-8)^4/(s^4*(s-3)^2)")
    num = fmpq_poly([-8, 3]) ** 4
    den = fmpq_poly([0, 0, 0, 0, 1]) * fmpq_poly([-3, 1]) ** 2
    assert r == RatFun(num, None, den)


def test_radical_expression():
    rad = RadicalSet(fmpq_poly([0, 16, 37, 10]))
    u = parse_expr("1/2+(5*s^2+2*s+2)/(6*s*(2*s+1))*t", rad)
    R = RatFun(fmpq_poly([2, 2, 5]), None, fmpq_poly([0, 6, 12]))
    assert u == FFElem(rad, RatFun.const(1) / 2, R)


def test_gaussian_constant():
    r = parse_expr("(1+i)*(1-i)")
    assert r == RatFun.const(2)


@pytest.mark.parametrize("text,pos", [("s^", 2), ("2s", 1), ("q+1", 0), ("(s+1", 4)])
def test_syntax_errors(text, pos):
    with pytest.raises(ParseError) as err:
        parse_expr(text)
    assert err.value.pos == pos


def test_radical_without_set():
    with pytest.raises(ParseError):
        parse_expr("1+t")


@pytest.mark.parametrize("text", ["-s^2*(s-1)/(2*s+3)^3", "1/2-(s^2-1)*t1/(s*t2)", "-(-s)^2", "a-(b-c)", "a/(b*c)"])
def test_print_round_trip(text):
    tree = parse_tree(text, ("a", "b", "c"))
    assert parse_tree(to_text(tree), ("a", "b", "c")) == tree
