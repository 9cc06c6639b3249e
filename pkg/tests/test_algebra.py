from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sagbilab import Polynomial, compare, format_poly, grevlex, grlex, is_homogeneous, lex, parse, substitute
from sagbilab.algebra import (
    EVERY_DEGREE,
    MAX_EXPONENT,
    Cmp,
    DimensionError,
    ExponentOverflowError,
    ParseError,
    RingMismatchError,
    SubstitutionError,
    UndefinedInitialTermError,
    block_order,
    order_from_name,
    weight_order,
)

XY = ("x", "y")
XYZ = ("x", "y", "z")

ORDERS3 = [
    lex(3),
    grlex(3),
    grevlex(3),
    lex(3, (2, 0, 1)),
    grevlex(3, (1, 2, 0)),
    weight_order((1, 2, 0)),
    weight_order((3, 1, 1)),
    block_order([(0,), (1, 2)], [lex(1), grevlex(2)]),
    block_order([(2, 0), (1,)], [grlex(2), lex(1)]),
]

exps3 = st.tuples(*[st.integers(0, 6)] * 3)


def test_lex_basic():
    assert compare(lex(2), (1, 0), (0, 5)) == Cmp.GREATER
    assert compare(lex(2), (0, 5), (1, 0)) == Cmp.LESS
    assert compare(lex(2), (2, 1), (2, 1)) == Cmp.EQUAL


def test_graded_orders_differ():
    a, b = (1, 0, 2), (0, 2, 1)
    assert compare(grlex(3), a, b) == Cmp.GREATER
    assert compare(grevlex(3), a, b) == Cmp.LESS
    assert compare(lex(3), a, b) == Cmp.GREATER


def test_priority_reverses_lex():
    assert compare(lex(2, (1, 0)), (1, 0), (0, 1)) == Cmp.LESS


def test_weight_ties_broken_by_lex():
    w = weight_order((1, 1))
    assert compare(w, (2, 0), (1, 1)) == Cmp.GREATER
    assert compare(weight_order((1, 3)), (2, 0), (0, 1)) == Cmp.LESS


def test_block_order_is_elimination():
    o = block_order([(0,), (1, 2)], [lex(1), grevlex(2)])
    assert compare(o, (1, 0, 0), (0, 9, 9)) == Cmp.GREATER


def test_order_errors():
    with pytest.raises(DimensionError):
        compare(lex(2), (1, 0), (1, 0, 0))
    with pytest.raises(DimensionError):
        weight_order((1, 2)).key((1, 2, 3))
    with pytest.raises(DimensionError):
        order_from_name("weight:1,2", 3)
    with pytest.raises(ValueError):
        order_from_name("revlex", 2)
    with pytest.raises(ValueError):
        weight_order((1, -1))
    with pytest.raises(ValueError):
        block_order([(0,), (0, 1)], [lex(1), lex(2)])


def test_order_names():
    assert order_from_name("LEX", 2) == lex(2)
    assert order_from_name("weight:2,1", 2) == weight_order((2, 1))
    assert grevlex(2).describe(XY) == "grevlex(x > y)"
    assert weight_order((1, 2)).describe(XY) == "weight(x > y, weight=[1, 2])"


@pytest.mark.parametrize("order", ORDERS3, ids=lambda o: o.describe())
@settings(max_examples=60, deadline=None)
@given(a=exps3, b=exps3, c=exps3)
def test_order_axioms(order, a, b, c):
    ab, ba = compare(order, a, b), compare(order, b, a)
    assert ab == -ba
    assert (ab == Cmp.EQUAL) == (a == b)
    if ab == Cmp.GREATER and compare(order, b, c) == Cmp.GREATER:
        assert compare(order, a, c) == Cmp.GREATER
    ac = tuple(x + z for x, z in zip(a, c))
    bc = tuple(x + z for x, z in zip(b, c))
    assert compare(order, ac, bc) == ab
    assert compare(order, ac, a) != Cmp.LESS


small_coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw, vars=XYZ, max_terms=4):
    n = len(vars)
    terms = draw(
        st.dictionaries(st.tuples(*[st.integers(0, 3)] * n), small_coeffs, max_size=max_terms)
    )
    return Polynomial(vars, terms)


@settings(max_examples=80, deadline=None)
@given(f=polys(), g=polys(), h=polys())
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == Polynomial.zero(XYZ)
    assert f * Polynomial.constant(XYZ, 1) == f
    assert -(-f) == f


@pytest.mark.parametrize("order", ORDERS3, ids=lambda o: o.describe())
@settings(max_examples=40, deadline=None)
@given(f=polys(), g=polys())
def test_initial_term_is_multiplicative(order, f, g):
    if not f or not g:
        return
    lf, lg = f.leading_exponent(order), g.leading_exponent(order)
    prod = f * g
    assert prod.leading_exponent(order) == tuple(p + q for p, q in zip(lf, lg))
    assert prod.leading_coefficient(order) == f.leading_coefficient(order) * g.leading_coefficient(order)


@settings(max_examples=80, deadline=None)
@given(f=polys())
def test_parse_format_roundtrip(f):
    for order in (lex(3), grevlex(3), grlex(3)):
        assert parse(format_poly(f, order), XYZ) == f


@st.composite
def homogeneous(draw, d):
    exps = st.tuples(st.integers(0, d), st.integers(0, d)).map(lambda t: (min(t), max(t) - min(t), d - max(t)))
    return Polynomial(XYZ, draw(st.dictionaries(exps, small_coeffs, min_size=1, max_size=5)))


@settings(max_examples=60, deadline=None)
@given(f=st.integers(1, 5).flatmap(homogeneous))
def test_graded_orders_agree_on_homogeneous(f):
    if not f:
        return
    d = is_homogeneous(f)
    assert d == f.total_degree()
    w = weight_order((1, 1, 1))
    assert f.leading_exponent(w) == f.leading_exponent(grlex(3)) == f.leading_exponent(lex(3))


def test_arithmetic_examples():
    x, y = (Polynomial.variable(XY, v) for v in XY)
    assert (x + y) ** 2 == parse("x^2 + 2*x*y + y^2", XY)
    assert str((x - y) * (x + y)) == "x^2 - y^2"
    assert str((x + y).scale(Fraction(1, 3))) == "1/3*x + 1/3*y"
    assert (x * y - 2).constant_value() == -2
    assert (2 * x + 4).monic(lex(2)) == x + 2
    assert Polynomial.zero(XY).total_degree() == -1


def test_initial_term_of_zero():
    with pytest.raises(UndefinedInitialTermError):
        Polynomial.zero(XY).leading_exponent(lex(2))


def test_is_homogeneous():
    assert is_homogeneous(parse("x^2 + x*y", XY)) == 2
    assert is_homogeneous(parse("x^2 + y", XY)) is None
    assert is_homogeneous(Polynomial.zero(XY)) is EVERY_DEGREE
    assert is_homogeneous(Polynomial.constant(XY, 3)) == 0


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        parse("x", XY) + parse("x", ("x", "z"))


def test_substitute():
    f = parse("X0*X2 - X1^2", ("X0", "X1", "X2"))
    images = {"X0": parse("x+y", XY), "X1": parse("x*y", XY), "X2": parse("x*y^2", XY)}
    assert substitute(f, images) == parse("x^2*y^2 + x*y^3 - x^2*y^2", XY)
    assert str(substitute(f, images)) == "x*y^3"
    g = parse("X0 + 1", ("X0", "X1", "X2"))
    assert substitute(g, {"X0": parse("y^2", XY)}) == parse("y^2 + 1", XY)


def test_substitute_errors():
    f = parse("X0*X1", ("X0", "X1"))
    with pytest.raises(SubstitutionError):
        substitute(f, {"X0": parse("x", XY)})
    with pytest.raises(RingMismatchError):
        substitute(f, {"X0": parse("x", XY), "X1": parse("z", ("z",))})


def test_substitute_constant_target():
    f = Polynomial.constant(("X0",), 5)
    assert substitute(f, {}, XY) == Polynomial.constant(XY, 5)


def test_parse_forms():
    assert parse("3/4*x^2*y - 2 x y + 7", XY) == Polynomial(XY, {(2, 1): Fraction(3, 4), (1, 1): -2, (0, 0): 7})
    assert parse("x*y").vars == XY
    assert parse("y*x").vars == ("y", "x")
    assert parse("x - x", XY).is_zero()


@pytest.mark.parametrize(
    "text, pos",
    [("x + * y", 4), ("x^", 2), ("x + 1/0", 6), ("x $ y", 2), ("x + q", 4), ("", 0), ("x y^y", 4)],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text, XY)
    assert info.value.position == pos
    assert f"position {pos}" in str(info.value)


def test_exponent_overflow():
    big = Polynomial.monomial(XY, (MAX_EXPONENT, 0))
    with pytest.raises(ExponentOverflowError):
        big * parse("x", XY)
    with pytest.raises(ExponentOverflowError):
        big**2


def test_json_roundtrip():
    f = parse("1/2*x^3 - y + 4", XY)
    assert Polynomial.from_json(f.to_json()) == f
