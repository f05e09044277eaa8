from fractions import Fraction
from math import comb

import pytest

from shimlift import forms as fm
from shimlift import qseries as qs
from shimlift.arith import divisors, moebius
from shimlift.characters import make_kronecker, make_trivial
from shimlift.errors import HypothesisViolated
from shimlift.rankin_cohen import bracket, gen_binomial
from shimlift.theorems import (
    build_g,
    compare,
    thm1_constant,
    thm1_sides,
    thm2_sides,
    thm3_sides,
    verify,
)

PSI = make_kronecker(12)
G_COEFFS = {7: 100, 10: -640, 11: 1040, 13: 2020, 14: -640, 17: -7500, 19: -16140}
WORKED = dict(f="builtin:f4l5", N=5, chi="trivial:5", psi="kronecker:12", t=1, w=1)


def f4l5(prec):
    return fm.eta_quotient([(1, 4), (5, 4)], prec)


def delta(prec):
    return fm.eta_quotient([(1, 24)], prec)


def test_build_g_examples():
    f = f4l5(30)
    g1 = build_g(f, 1, make_trivial(1), 2, 30)
    assert g1.series == bracket(f, f, 2).series
    assert not build_g(f, 1, make_trivial(1), 3, 30).series.nonzero()
    g = build_g(f, 12, PSI, 2, 20)
    assert dict(g.series.nonzero()) == G_COEFFS


def test_thm1_constant():
    assert thm1_constant(4, 1, 0) == Fraction(comb(2, 1), comb(5, 4))
    assert thm1_constant(12, 0, 0) == 1


def test_thm1_worked_example():
    report = verify("thm1", WORKED, 20)
    assert report.passed, report.format()
    assert report.precision == 19
    lhs, rhs = thm1_sides(f4l5(101), 5, make_trivial(5), PSI, 12, 1, 1, 20)
    # theta_psi = 2 eta(24z), so this is twice the lift g_psi / 5 of [f(48z), eta(24z)]_1
    for n in range(1, 20):
        assert rhs.coefficient(n) == Fraction(2 * PSI(n) * G_COEFFS.get(n, 0), 5)


def test_thm1_selberg_instance():
    assert verify("thm1", dict(f="builtin:delta", N=1, chi="trivial:1", psi="trivial:1", w=0), 20).passed
    assert verify("selberg", dict(f="builtin:delta"), 31).passed


def test_thm1_hypotheses():
    with pytest.raises(HypothesisViolated):
        thm1_sides(delta(200), 2, make_trivial(1), make_trivial(2), 2, 2, 0, 10)
    rep = verify("thm1", dict(f="builtin:delta", N=2, chi="trivial:1", psi="trivial:2", r=2, t=2), 10)
    assert not rep.passed and isinstance(rep.error, HypothesisViolated)


@pytest.mark.parametrize("params", [
    dict(f="builtin:f4l5", N=5, chi="trivial:5", psi="kronecker:-4", t=1, w=0),
    dict(f="builtin:f4l5", N=5, chi="trivial:5", psi="kronecker:-4", t=1, w=2),
    dict(f="builtin:f4l5", N=5, chi="trivial:5", psi="kronecker:-3", t=5, w=1),
    dict(f="builtin:f4l5", N=5, chi="trivial:5", psi="images:3:3=1/2", t=1, w=1),
    dict(f="builtin:f4l5", N=5, chi="trivial:5", psi="kronecker:8", t=5, w=0),
    dict(f="builtin:delta", N=1, chi="trivial:1", psi="kronecker:-4", t=1, w=1),
], ids=lambda p: f"{p['f'][8:]}-{p['psi']}-t{p['t']}-w{p['w']}")
def test_thm1_grid(params):
    rep = verify("thm1", params, 12)
    assert rep.passed, rep.format()


def test_thm2_instances():
    base = dict(f="builtin:f4l5", N=5, chi="trivial:5", D=5, r=1, psi="trivial:1")
    f = f4l5(460)
    for w in (0, 1):
        rep = verify("thm2", dict(base, w=w), 20)
        assert rep.passed, rep.format()
    lhs, rhs = thm2_sides(f, 5, make_trivial(5), make_trivial(1), 1, 5, 0, 20)
    assert lhs.series == qs.multiply(f.series, f.series).truncate(20)
    lhs, rhs = thm2_sides(f, 5, make_trivial(5), make_trivial(1), 1, 5, 1, 20)
    ff = bracket(f, f, 2).series.truncate(20)
    assert rhs.series == ff.scale(2)
    rep = verify("thm2", dict(base, D=6), 10)
    assert isinstance(rep.error, HypothesisViolated)


def test_thm1_thm2_rhs_relation():
    # common instance t = D = 5, r = 1: thm1 rhs = a(5) * thm2 rhs | (I - chi(2) 2^{k+2w-1} B(2))
    f = f4l5(600)
    chi = make_trivial(5)
    for w in (0, 1):
        _, r1 = thm1_sides(f, 5, chi, make_trivial(1), 1, 5, w, 15)
        _, r2 = thm2_sides(f, 5, chi, make_trivial(1), 1, 5, w, 15)
        expect = fm.scale(fm.apply_aI_bB(r2, 1, -(2 ** (4 + 2 * w - 1)), 2), f.coefficient(5))
        assert r1.series == expect.series.truncate(15)


def test_thm3_instance():
    rep = verify("thm3", dict(f="builtin:delta", N=1, chi="trivial:1", r=2, t=1, w=0, M=8), 15)
    assert rep.passed, rep.format()
    lhs, _ = thm3_sides(delta(200), 1, make_trivial(1), 2, 1, 0, 8, 15)
    d = delta(15).series
    d2 = qs.dilate(d, 2).truncate(15)
    expected = qs.linear_combine(2, qs.multiply(d, d2), 24, qs.multiply(d2, d2))
    assert lhs.series == expected.truncate(15)


@pytest.mark.parametrize("r,w", [(1, 0), (1, 1), (3, 0), (3, 1), (4, 0)])
def test_thm3_grid(r, w):
    M = 4 * r
    rep = verify("thm3", dict(f="builtin:delta", N=1, chi="trivial:1", r=r, t=1, w=w, M=M), 10)
    assert rep.passed, rep.format()


def test_thm3_level_hypothesis():
    rep = verify("thm3", dict(f="builtin:delta", N=1, chi="trivial:1", r=2, t=1, w=0, M=12), 10)
    assert isinstance(rep.error, HypothesisViolated)


def test_lemma1_verify():
    assert verify("lemma1", {"kmax": 8, "wmax": 6}).passed


def test_fault_scale_reported_at_seven():
    rep = verify("thm1", dict(WORKED, fault_scale=2), 20)
    assert not rep.passed
    n, lhs, rhs = rep.first_mismatch
    assert (n, lhs, rhs) == (7, -40, -80)
    assert "first mismatch at n=7" in rep.format()


@pytest.mark.parametrize("side", ["lhs", "rhs"])
@pytest.mark.parametrize("n", [1, 2, 7, 13, 19])
def test_single_fault_index(side, n):
    rep = verify("thm1", dict(WORKED, fault_index=n, fault_side=side), 20)
    assert not rep.passed
    assert rep.first_mismatch[0] == n


def test_non_eigenform_rejected():
    rep = verify("selberg", dict(f=lambda prec: fm.scale(delta(prec), 2)), 10)
    assert isinstance(rep.error, HypothesisViolated)
    mixed = lambda prec: delta(prec).with_series(delta(prec).series + fm.eisenstein(12, prec).series)
    rep = verify("selberg", dict(f=mixed), 10)
    assert isinstance(rep.error, HypothesisViolated)


def test_compare():
    a = fm.eisenstein(4, 10)
    assert compare(a, a, 10) is None
    b = fm.scale(a, 2)
    assert compare(a, b, 10)[0] == 1


# -- the proof's coefficient formula, evaluated from scratch ----------------


def b_double_sum(a, psi, k, r, t, w, n):
    """b(t n^2) of [f(4rz), theta_psi(tz)]_w as the raw sum over j and m."""
    v = psi.parity
    total = 0
    for j in range(w + 1):
        c = (-1) ** j * comb(k + w - 1, w - j) * gen_binomial(Fraction(2 * w - 1 + 2 * v, 2), j)
        inner = 0
        for m in range(-n, n + 1):
            num = t * n * n - t * m * m
            if num <= 0 or num % (4 * r):
                continue
            inner += psi(m) * t ** (w - j) * m ** (2 * w - 2 * j + v) * num**j * a[num // (4 * r)]
        total += c * inner
    return total


def b_closed_form(f, g, psi, chi, k, t, w, n):
    v = psi.parity
    s = 0
    for d in divisors(n):
        s += moebius(d) * chi(d) * d ** (k + 2 * w + v - 1) * psi(d) * psi(n // d) * g.coefficient(n // d)
    return thm1_constant(k, w, v) * t**w * f.coefficient(t) * s


@pytest.mark.parametrize("psi,t,w", [(PSI, 1, 1), (PSI, 5, 1), (make_kronecker(-4), 1, 2)],
                         ids=["worked", "t5", "odd-psi"])
def test_b_tn2_oracle(psi, t, w):
    r, k = psi.modulus, 4
    f = f4l5(200)
    P = t * 100 + 1
    B = bracket(fm.dilate(f, 4 * r), fm.theta_series(psi, t, P), w)
    g = build_g(f, r, psi, 2 * w + psi.parity, 11)
    chi = make_trivial(5)
    for n in range(1, 11):
        direct = b_double_sum(f.series.coeffs, psi, k, r, t, w, n)
        assert direct == B.coefficient(t * n * n)
        assert b_closed_form(f, g, psi, chi, k, t, w, n) == direct
