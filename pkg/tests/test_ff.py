import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from minweight.errors import CapacityError, FieldMismatchError, InvalidParameterError, NotEnumerableError
from minweight.ff import (
    arith,
    canonical_modulus,
    enumerate_elements,
    field_of_order,
    make_field,
    prime_power,
)

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def _polymul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def _reducible_by_products(poly, p):
    """Oracle: poly equals a product of two monic factors of positive degree."""
    m = len(poly) - 1
    monics = lambda d: ([*c, 1] for c in itertools.product(range(p), repeat=d))
    for d in range(1, m):
        for a in monics(d):
            for b in monics(m - d):
                if _polymul(a, b, p) == list(poly):
                    return True
    return False


def test_prime_field():
    F = make_field(5, 1)
    assert F.q == 5 and F.modulus is None and F.characteristic == 5


def test_rationals():
    Q = make_field(None)
    assert Q.kind == "rationals" and Q.q is None and Q.characteristic == 0


def test_f8_modulus_is_x3_x_1():
    assert make_field(2, 3).modulus == (1, 1, 0, 1)


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_modulus_is_lex_first_irreducible(p, m):
    mod = canonical_modulus(p, m)
    assert mod[-1] == 1 and len(mod) == m + 1
    assert not _reducible_by_products(mod, p)
    # every lex-smaller monic of degree m factors
    for top_down in itertools.product(range(p), repeat=m):
        cand = tuple(reversed(top_down)) + (1,)
        if cand == mod:
            break
        assert _reducible_by_products(cand, p)


def test_descriptor_is_canonical():
    assert make_field(3, 2) == make_field(3, 2)
    assert make_field.__wrapped__(3, 2) == make_field(3, 2)


def test_make_field_errors():
    with pytest.raises(InvalidParameterError, match="characteristic"):
        make_field(6)
    with pytest.raises(InvalidParameterError):
        make_field(5, 0)
    with pytest.raises(CapacityError):
        make_field(2, 20)


def test_prime_power():
    assert prime_power(49) == (7, 2)
    assert prime_power(13) == (13, 1)
    with pytest.raises(InvalidParameterError):
        prime_power(12)


def test_inverse_in_f5():
    F = make_field(5)
    assert F(2).inv() == F(3)
    assert arith(F(2), None, "inv") == 3


def test_f8_generator_cubed():
    F = make_field(2, 3)
    g = F.gen
    assert arith(g, arith(g, 2, "pow"), "mul") == g + 1
    assert str(g * g**2) == "011"


def test_rational_round_trip():
    Q = make_field(None)
    third = arith(Q(1), Q(3), "div")
    assert third.value == Fraction(1, 3)
    assert third * 3 == Q.one


def test_arith_errors():
    F5, F7 = make_field(5), make_field(7)
    with pytest.raises(ZeroDivisionError):
        F5(3) / F5(0)
    with pytest.raises(ZeroDivisionError):
        make_field(2, 3).zero.inv()
    with pytest.raises(FieldMismatchError):
        F5(1) + F7(1)
    with pytest.raises(FieldMismatchError):
        arith(F5(1), F7(1), "mul")
    with pytest.raises(InvalidParameterError):
        arith(F5(1), F5(1), "xor")


def test_enumerate_small():
    assert [str(a) for a in enumerate_elements(make_field(2))] == ["0", "1"]
    F4 = make_field(2, 2)
    els = enumerate_elements(F4)
    assert len(set(els)) == 4 and els[0] == F4.zero and els[1] == F4.one


def test_enumerate_f25_closed_under_mul():
    F = field_of_order(25)
    els = enumerate_elements(F)
    assert len(els) == 25 and len(set(els)) == 25
    members = set(els)
    for a in els:
        for b in els:
            assert a * b in members


def test_enumerate_rationals_fails():
    with pytest.raises(NotEnumerableError):
        enumerate_elements(make_field(None))


def test_index_order_is_coordinate_lex():
    F = make_field(3, 2)
    rendered = [str(a) for a in F.elements()]
    assert rendered == sorted(rendered)
    assert all(F.index(a) == i for i, a in enumerate(F.elements()))


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    els = F.elements()
    zero, one = F.zero, F.one
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a:
            assert a * a.inv() == one
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
        assert (a - b) + b == a
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64])
def test_frobenius_exhaustive(q):
    F = field_of_order(q)
    assert all(a**q == a for a in F.elements())


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([81, 121, 125, 169, 243, 289, 343]), st.data())
def test_field_axioms_random(q, data):
    F = field_of_order(q)
    a, b, c = (F.from_index(data.draw(st.integers(0, q - 1))) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if b:
        assert (a / b) * b == a


@pytest.mark.parametrize("q", [5, 8, 9, 25, 49])
def test_text_round_trip(q):
    F = field_of_order(q)
    for a in F.elements():
        assert F.parse(str(a)) == a


def test_text_forms():
    Q = make_field(None)
    assert str(Q(Fraction(-3, 6))) == "-1/2" and str(Q(4)) == "4"
    assert Q.parse("-1/2") == Q(Fraction(-1, 2))
    assert str(make_field(2, 3).from_index(3)) == "011"
    assert str(make_field(13)(12)) == "12"


def test_elements_immutable():
    a = make_field(5)(2)
    with pytest.raises(AttributeError):
        a.value = (3,)


def test_json_round_trip():
    from minweight.ff import FieldDescriptor

    for F in (make_field(None), make_field(7), make_field(2, 3)):
        assert FieldDescriptor.from_json(F.to_json()) == F
