from math import gcd

import pytest

from shimlift.characters import (
    DirichletCharacter,
    component_psi_d,
    decompose,
    eval_char,
    induce,
    make_kronecker,
    make_trivial,
    multiply,
    parse_character,
    power,
)
from shimlift.errors import BadUnitaryDivisor, NotDivisible, ParseError
from shimlift.exact_ring import CyclotomicElement, embed_order

chi4 = make_kronecker(-4)
chi3 = make_kronecker(-3)
psi12 = make_kronecker(12)
# order 4 character mod 5: 2 -> i
quartic5 = DirichletCharacter.from_images(5, {5: ["1/4"]})


def _zoo():
    chars = [make_trivial(1), make_trivial(6), chi4, chi3, psi12, quartic5,
             make_kronecker(8), make_kronecker(-8), make_kronecker(5), make_kronecker(-20)]
    chars.append(multiply(quartic5, chi4))
    chars.append(DirichletCharacter.from_images(16, {16: ["1/2", "1/4"]}))
    chars.append(DirichletCharacter.from_images(63, {9: ["1/3"], 7: ["1/6"]}))
    chars.append(induce(psi12, 24))
    return chars


def test_trivial_examples():
    one = make_trivial(1)
    assert [one(n) for n in (-3, 0, 1, 17)] == [1, 1, 1, 1]
    assert make_trivial(2)(4) == 0
    assert make_trivial(5)(7) == 1


def test_kronecker_examples():
    assert chi4.parity == 1 and chi4(3) == -1
    assert psi12.parity == 0
    assert make_kronecker(1) == make_trivial(1)
    assert eval_char(psi12, 5) == -1
    assert eval_char(psi12, 11) == 1
    assert all(psi12(n) == 0 for n in (2, 3, 4, 6, 9, 10))


def test_multiply_examples():
    for psi in _zoo():
        assert multiply(psi, make_trivial(1)) == psi
    assert multiply(chi4, chi4) == make_trivial(4)
    prod = multiply(chi4, chi3)
    assert all(prod(n) == psi12(n) for n in range(101))


def test_induce_examples():
    assert induce(make_trivial(1), 4) == make_trivial(4)
    big = induce(psi12, 24)
    assert big(5) == -1 and big(2) == 0
    assert induce(psi12, 12) is psi12
    with pytest.raises(NotDivisible):
        induce(psi12, 18)


def test_decompose_examples():
    parts = dict(decompose(psi12))
    assert parts[4] == chi4 and parts[3] == chi3
    assert decompose(make_trivial(1)) == []
    assert decompose(chi4) == [(4, chi4)]


def test_component_psi_d_examples():
    p4 = component_psi_d(psi12, 4)
    assert p4 == chi4 and p4(-1) == -1
    p1 = component_psi_d(psi12, 1)
    assert p1.modulus == 1 and p1(-1) == 1
    assert component_psi_d(psi12, 12) == psi12
    with pytest.raises(BadUnitaryDivisor):
        component_psi_d(psi12, 2)


def test_embed_order():
    z3 = CyclotomicElement.zeta(3)
    assert embed_order(z3, 6) == CyclotomicElement.zeta(6, 2)
    assert embed_order(z3, 12) ** 3 == 1
    assert embed_order(5, 7) == 5


def test_complex_values():
    assert quartic5.order == 4
    i = CyclotomicElement.zeta(4)
    assert quartic5(2) == i
    assert quartic5(4) == -1
    assert quartic5(3) == -i
    assert power(quartic5, 2) == make_kronecker(5)
    assert power(quartic5, 4) == make_trivial(5)


@pytest.mark.parametrize("psi", _zoo(), ids=lambda c: c.label)
def test_character_invariants(psi):
    r = psi.modulus
    for n in range(1, 5 * r + 1):
        assert (psi(n) == 0) == (gcd(n, r) > 1)
        assert psi(n + r) == psi(n)
        for m in range(1, 12):
            assert psi(m * n) == psi(m) * psi(n)
    assert psi(-1) == (-1) ** psi.parity
    # decomposition reproduces the values
    parts = decompose(psi)
    for n in range(1, 5 * r + 1):
        v = 1
        for _, c in parts:
            v = v * embed_order(c(n), psi.order) if psi.order > 2 else v * c(n)
        assert v == psi(n)


@pytest.mark.parametrize("psi", _zoo(), ids=lambda c: c.label)
def test_unitary_components_multiply_back(psi):
    r = psi.modulus
    for d in range(1, r + 1):
        if r % d == 0 and gcd(d, r // d) == 1:
            both = multiply(component_psi_d(psi, d), component_psi_d(psi, r // d))
            assert both == psi


@pytest.mark.parametrize("psi", _zoo(), ids=lambda c: c.label)
def test_label_round_trip(psi):
    assert parse_character(psi.label) == psi


def test_parse_grammar():
    assert parse_character("trivial:5") == make_trivial(5)
    assert parse_character("kronecker:-4") == chi4
    assert parse_character("prod(kronecker:-4,kronecker:-3)") == multiply(chi4, chi3)
    assert parse_character("induce(kronecker:12,24)") == induce(psi12, 24)
    assert parse_character("images:5:5=1/4") == quartic5
    for bad in ("kronecker:6", "trivial:x", "prod(", "induce(trivial:2,3)", "nonsense"):
        with pytest.raises(ParseError):
            parse_character(bad)
