import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from minweight.errors import FieldMismatchError, InvalidParameterError
from minweight.ff import field_of_order, make_field
from minweight.poly import Polynomial, dilate_root, multiplicity_at, strip_x_power, weight

Q = make_field(None)
F2, F5 = make_field(2), make_field(5)
X = Polynomial.x


def P(F, text):
    return Polynomial.parse(F, text)


def test_zero_polynomial():
    z = Polynomial(Q)
    assert weight(z) == 0 and z.degree is None and z.coeffs == ()
    assert Polynomial(F5, [0, 0, 5]) == z.__class__(F5)


def test_weight_examples():
    assert weight(P(F2, "x^5 + x^4 + x + 1")) == 4
    assert weight((X(F2) - 1) ** 5) == 4
    x = X(Q)
    assert weight((x**2 - 1) ** 3) == 4


def test_ring_ops_examples():
    x = X(Q)
    assert (x + 1) ** 2 * (x + 1) == P(Q, "x^3 + 3*x^2 + 3*x + 1")
    quot, rem = divmod(P(Q, "x^3 + 2*x^2 + x"), (x + 1) ** 2)
    assert quot == x and not rem
    assert (X(F5) - 1) ** 5 == P(F5, "x^5 - 1")


def test_ring_errors():
    with pytest.raises(ZeroDivisionError):
        divmod(X(Q), Polynomial(Q))
    with pytest.raises(FieldMismatchError):
        X(Q) + X(F5)


def test_multiplicity_examples():
    x = X(Q)
    assert multiplicity_at((x + 1) ** 3 * (x - 2), -1) == 3
    assert multiplicity_at(P(F5, "x^5 - 1"), 1) == 5
    f = P(F5, "x^2 + 1")
    assert f(2) == 0 and multiplicity_at(f, 2) == 1
    with pytest.raises(InvalidParameterError):
        multiplicity_at(Polynomial(Q), 1)


def test_multiplicity_beyond_p():
    # derivative tests would fail here: multiplicity 2p over F_p
    f = (X(F5) - 3) ** 10 * (X(F5) + 1)
    assert multiplicity_at(f, 3) == 10


def test_strip_x_power_examples():
    assert strip_x_power(P(Q, "x^3 + 2*x^2 + x")) == (P(Q, "x^2 + 2*x + 1"), 1)
    assert strip_x_power(P(Q, "x^5 + 1")) == (P(Q, "x^5 + 1"), 0)
    assert strip_x_power(P(Q, "x^4")) == (Polynomial(Q, [1]), 4)
    with pytest.raises(InvalidParameterError):
        strip_x_power(Polynomial(Q))


def test_dilate_root_examples():
    f = (X(F5) - 2) ** 2
    g = dilate_root(f, 2)
    assert multiplicity_at(g, 1) == 2
    assert dilate_root(f, 1) == f
    h = (X(Q) - 3) ** 4
    assert weight(dilate_root(h, 3)) == weight(h) == 5
    with pytest.raises(InvalidParameterError):
        dilate_root(f, 0)


def test_dilate_exhaustive_f5():
    """Weight kept and root xi moved to 1, for every monic f of degree <= 4."""
    els = F5.elements()
    for deg in range(1, 5):
        for low in itertools.product(range(5), repeat=deg):
            f = Polynomial(F5, [*low, 1])
            for xi in els[1:]:
                g = dilate_root(f, xi)
                assert weight(g) == weight(f)
                assert multiplicity_at(g, 1) == multiplicity_at(f, xi)


def test_text_forms():
    assert str(P(F5, "x^3 + 2*x^2 + x")) == "x^3 + 2*x^2 + x"
    assert str(Polynomial(Q, [Fraction(-1, 2), 0, Fraction(3, 2), 1])) == "x^3 + 3/2*x^2 - 1/2"
    assert str(Polynomial(Q, [2, -1])) == "-x + 2"
    assert str(Polynomial(Q)) == "0"
    F8 = make_field(2, 3)
    f = Polynomial(F8, [F8.gen, 1, F8.gen + 1])
    assert str(f) == "011*x^2 + x + 010"
    assert P(F8, str(f)) == f


def test_json_round_trip():
    f = P(field_of_order(25), "x^3 + 12*x + 04")
    assert Polynomial.from_json(f.to_json()) == f
    assert f.to_json()["coeffs"] == ["04", "12", "00", "01"]


# -- properties

FIELDS = [make_field(None), make_field(2), make_field(5), make_field(7), field_of_order(9)]


@st.composite
def polys(draw, F, max_deg=6, nonzero=False):
    if F.is_finite:
        coef = st.integers(0, F.q - 1).map(F.from_index)
    else:
        coef = st.fractions(min_value=-50, max_value=50, max_denominator=7).map(F)
    cs = draw(st.lists(coef, min_size=1 if nonzero else 0, max_size=max_deg + 1))
    f = Polynomial(F, cs)
    if nonzero and not f:
        f = Polynomial(F, [1])
    return f


@st.composite
def field_and_polys(draw):
    F = draw(st.sampled_from(FIELDS))
    return F, draw(polys(F)), draw(polys(F, nonzero=True))


def _is_normal(f):
    return not f.coeffs or bool(f.coeffs[-1])


@settings(max_examples=400, deadline=None)
@given(field_and_polys())
def test_divmod_round_trip(args):
    F, a, b = args
    q, r = divmod(a, b)
    assert q * b + r == a
    assert not r or r.degree < b.degree
    assert all(_is_normal(g) for g in (q, r, a + b, a * b, a - b))


@settings(max_examples=300, deadline=None)
@given(field_and_polys(), st.data())
def test_multiplicity_additive(args, data):
    F, _, f = args
    xi = F.from_index(data.draw(st.integers(0, F.q - 1))) if F.is_finite else F(data.draw(st.integers(-5, 5)))
    assert multiplicity_at(f * Polynomial.linear(F, xi), xi) == multiplicity_at(f, xi) + 1


@settings(max_examples=300, deadline=None)
@given(field_and_polys(), st.data())
def test_dilation_invariant(args, data):
    F, _, f = args
    if F.is_finite:
        xi = F.from_index(data.draw(st.integers(1, F.q - 1)))
    else:
        xi = F(data.draw(st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(bool)))
    g = dilate_root(f, xi)
    assert weight(g) == weight(f)
    assert multiplicity_at(g, 1) == multiplicity_at(f, xi)
