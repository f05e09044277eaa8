from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shimlift.errors import IncompatibleOrder, ParseError
from shimlift.exact_ring import (
    CyclotomicElement,
    cyclotomic_polynomial,
    embed_rational,
    format_value,
    parse_value,
    ring_arith,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)


def cyclo(m):
    n = len(cyclotomic_polynomial(m)) - 1
    return st.lists(rationals, min_size=n, max_size=n).map(lambda c: CyclotomicElement(m, c))


def values(m):
    return st.one_of(rationals, st.integers(-50, 50), cyclo(m))


def test_cyclotomic_polynomial_examples():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


def test_ring_arith_examples():
    assert ring_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    z4 = CyclotomicElement.zeta(4)
    assert ring_arith(z4, z4, "mul") == -1
    z6 = CyclotomicElement.zeta(6)
    assert ring_arith(z6, z6**5, "add") == 1


def test_embed_rational_examples():
    assert embed_rational(Fraction(3, 2), 4).coeffs == (Fraction(3, 2), 0)
    assert not any(embed_rational(0, 6).coeffs)
    for m in (3, 4, 5, 8, 12):
        assert embed_rational(2, m) * embed_rational(Fraction(1, 2), m) == embed_rational(1, m)


@pytest.mark.parametrize("m", range(1, 25))
def test_root_of_unity_relations(m):
    z = CyclotomicElement.zeta(m)
    p = 1
    for _ in range(m):
        p = ring_arith(p, z, "mul")
    assert p == 1
    # Phi_m(zeta) = 0 by Horner
    acc = embed_rational(0, m)
    for c in reversed(cyclotomic_polynomial(m)):
        acc = ring_arith(ring_arith(acc, z, "mul"), c, "add")
    assert acc == 0


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 4, 5, 7, 8, 12, 15]).flatmap(lambda m: st.tuples(values(m), values(m), values(m))))
def test_ring_axioms(abc):
    a, b, c = abc
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@settings(max_examples=80, deadline=None)
@given(rationals, rationals, st.sampled_from([1, 3, 4, 6, 10]))
def test_embed_is_injective_homomorphism(p, q, m):
    assert embed_rational(p + q, m) == embed_rational(p, m) + embed_rational(q, m)
    assert embed_rational(p * q, m) == embed_rational(p, m) * embed_rational(q, m)
    assert (embed_rational(p, m) == embed_rational(q, m)) == (p == q)


def test_mixed_orders_rejected():
    with pytest.raises(IncompatibleOrder):
        CyclotomicElement.zeta(4) + CyclotomicElement.zeta(3)


def test_rational_equality_and_hash():
    x = embed_rational(Fraction(7, 3), 5)
    assert x == Fraction(7, 3)
    assert hash(x) == hash(Fraction(7, 3))
    assert x.is_rational


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([4, 5, 8, 12]).flatmap(values))
def test_format_parse_round_trip(x):
    s = format_value(x)
    assert parse_value(s) == x
    assert format_value(parse_value(s)) == s


@pytest.mark.parametrize("bad", ["x", "1/0", "[1,2", "[1,2]@", "1//2", ""])
def test_parse_value_rejects(bad):
    with pytest.raises(ParseError):
        parse_value(bad)
