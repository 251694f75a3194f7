import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poincare_git.algebra import (
    CycloRational,
    IntPoly,
    TruncatedSeries,
    euler_characteristic,
    exact_div,
    expand,
    is_palindromic,
    kirwan_factor,
    one_minus_t,
    poly_arith,
)
from poincare_git.errors import EmptyQuotient, NotPolynomial

from oracles import geometric_convolution

P = IntPoly.parse

polys = st.dictionaries(st.integers(0, 40), st.integers(-(10**6), 10**6), max_size=12).map(IntPoly)


def test_poly_arith_examples():
    a = P("1 + t^2")
    assert poly_arith(a, a, "mul") == P("1 + 2*t^2 + t^4")
    assert poly_arith(a, a, "sub") == IntPoly()
    assert poly_arith(P("1 + t^2 + t^4"), P("t^2"), "mul") == P("t^2 + t^4 + t^6")
    assert poly_arith(a, a, "add") == P("2 + 2*t^2")
    with pytest.raises(ValueError):
        poly_arith(a, a, "div")


def test_canonical_form_has_no_zeros():
    p = IntPoly({0: 1, 3: 0, 5: 2}) - IntPoly({5: 2})
    assert p.coefficients == {0: 1}
    assert p.degree == 0
    assert IntPoly([0, 0, 0]).degree == -1
    assert IntPoly({2: 1, 0: 1}) == IntPoly([1, 0, 1])


@pytest.mark.parametrize(
    "text",
    ["0", "1", "t", "-t", "1 + 2*t^2 + t^4", "3 - t^3", "-2 + 7*t^11", "t^2 + 12345678901234567890*t^40"],
)
def test_render_parse_roundtrip(text):
    assert str(P(text)) == text


def test_render_format():
    assert str(IntPoly([1, 0, 2, 0, 1])) == "1 + 2*t^2 + t^4"
    assert str(IntPoly([0, 1])) == "t"
    assert str(IntPoly([-1, -1])) == "-1 - t"
    assert IntPoly([1, 0, 2, 0, 1]).latex() == "1 + 2t^{2} + t^{4}"
    assert P("1 + t^{2}") == P("1 + t^2")


def test_parse_rejects_garbage():
    for bad in ["", "1 + + t", "x^2", "t^"]:
        with pytest.raises(ValueError):
            P(bad)


@settings(max_examples=200, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == IntPoly()


@settings(max_examples=100, deadline=None)
@given(polys, polys.filter(bool))
def test_divmod_by_unit_leading(a, b):
    # make the divisor's leading coefficient +-1 so the quotient is integral
    b = b + IntPoly.monomial(b.degree + 1)
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_kirwan_factor_examples():
    assert kirwan_factor(1) == IntPoly(1)
    assert kirwan_factor(3) == P("1 + t^2 + t^4")
    for d in range(1, 13):
        assert kirwan_factor(d) * one_minus_t(2) == one_minus_t(2 * d)


@pytest.mark.parametrize("d", [0, -1, -5])
def test_kirwan_factor_rejects_nonpositive(d):
    with pytest.raises(EmptyQuotient):
        kirwan_factor(d)


@pytest.mark.parametrize("d", range(1, 33))
def test_kirwan_factor_telescopes(d):
    assert kirwan_factor(d) * one_minus_t(2) == one_minus_t(2 * d)


def test_expand_examples():
    assert expand(CycloRational(1, [2]), 6) == TruncatedSeries([1, 0, 1, 0, 1, 0, 1], 6)
    s = expand(CycloRational(P("1 + t^2")), 1)
    assert s.coeffs == (1, 0) and s.order == 1
    want = geometric_convolution([2, 4], 8)
    assert expand(CycloRational(1, [2, 4]), 8).coeffs == tuple(want)
    assert want == [1, 0, 1, 0, 2, 0, 2, 0, 3]


@pytest.mark.parametrize("ks", [[1], [2, 2], [2, 4, 6], [1, 3], [4, 6, 8]])
def test_expand_matches_convolution_oracle(ks):
    assert list(expand(CycloRational(1, ks), 24).coeffs) == geometric_convolution(ks, 24)


def test_expand_truncation_is_consistent():
    rng = random.Random(7)
    for _ in range(50):
        num = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(0, 8))])
        r = CycloRational(num, [rng.choice([1, 2, 3, 4, 6]) for _ in range(rng.randint(0, 4))])
        n = rng.randint(0, 30)
        m = rng.randint(0, n)
        assert expand(r, n).truncate(m) == expand(r, m)


@settings(max_examples=100, deadline=None)
@given(polys, st.integers(0, 60))
def test_expand_polynomial_is_truncation(p, n):
    assert expand(CycloRational(p), n).coeffs == tuple(p.coeff(k) for k in range(n + 1))


def test_exact_div_examples():
    assert exact_div(CycloRational(P("1 - t^4"), [2])) == P("1 + t^2")
    assert exact_div(CycloRational(P("1 + t^2"))) == P("1 + t^2")
    with pytest.raises(NotPolynomial):
        exact_div(CycloRational(P("1 - t^3"), [2]))


@settings(max_examples=100, deadline=None)
@given(polys, st.lists(st.sampled_from([1, 2, 3, 4, 6]), max_size=4))
def test_exact_div_multiplies_back(p, ks):
    den = IntPoly(1)
    for k in ks:
        den = den * one_minus_t(k)
    r = CycloRational(p * den, ks)
    q = exact_div(r)
    assert q * den == p * den
    assert q == p


def test_cyclorational_normalises():
    r = CycloRational(P("1 - t^4"), [2, 4])
    assert r.numerator == IntPoly(1) and r.denominator == (2,)
    assert CycloRational(0, [2, 4]).denominator == ()
    assert CycloRational(P("1 + t^2"), [4]) == CycloRational(1, [2])
    assert hash(CycloRational(P("1 + t^2"), [4])) == hash(CycloRational(1, [2]))


def test_cyclorational_arithmetic():
    a = CycloRational(1, [2])
    assert a - a == CycloRational(0)
    assert a * CycloRational(one_minus_t(2)) == CycloRational(1)
    # 1/(1-t^2) + 1/(1-t^4) expands term by term
    s = a + CycloRational(1, [4])
    assert expand(s, 10) == expand(a, 10) + expand(CycloRational(1, [4]), 10)
    assert str(CycloRational(P("1 + t^2"), [2])) == "(1 + t^2)/(1-t^2)"
    assert str(CycloRational(1, [2, 2, 4])) == "1/(1-t^2)^2(1-t^4)"


def test_truncated_series_order_is_min():
    a = TruncatedSeries([1, 1, 1], 2)
    b = TruncatedSeries([1, 2, 3, 4, 5], 4)
    assert (a + b).order == 2 and (a * b).order == 2 and (a - b).order == 2
    assert (a * b).coeffs == (1, 3, 6)
    assert str(TruncatedSeries([1, 0, 1], 2)) == "1 + t^2 + O(t^3)"
    with pytest.raises(IndexError):
        a.coeff(3)


def test_euler_characteristic():
    assert euler_characteristic(P("1 + t^2 + t^4")) == 3
    assert euler_characteristic(IntPoly()) == 0
    assert euler_characteristic(P("1 + 2*t^2 + t^4")) == 4
    assert euler_characteristic(P("1 + 4*t + t^2")) == -2


def test_is_palindromic():
    assert is_palindromic(P("1 + 2*t^2 + t^4"), 2)
    assert not is_palindromic(P("1 + t^2"), 2)
    assert is_palindromic(IntPoly(1), 0)
    assert not is_palindromic(P("1 + t^6"), 2)
    assert is_palindromic(P("1 + 4*t + t^2"), 1)
