"""
Rankin-Cohen brackets on q-expansions.

With D = q d/dq the w-th bracket of f (weight k) and g (weight l) is

    [f, g]_w = sum_{j=0}^{w} (-1)^j C(k+w-1, w-j) C(l+w-1, j) D^j f * D^{w-j} g,

where k and l may be half-integers and C is the generalized binomial
coefficient.  Since (2 pi i)^{-1} d/dz = D, no transcendental factor appears
and all coefficients stay exact.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import comb, factorial, lcm
from typing import Union

from . import qseries as qs
from .characters import make_kronecker, multiply, power
from .forms import FormExpansion

__all__ = ["bracket", "bracket_series", "gen_binomial", "lemma1_check"]

HalfInteger = Union[int, Fraction]


def gen_binomial(x, j: int) -> Fraction:
    """x (x-1) ... (x-j+1) / j! for rational x."""
    if j < 0:
        raise ValueError("lower index must be non-negative")
    num = Fraction(1)
    for i in range(j):
        num *= Fraction(x) - i
    out = num / factorial(j)
    return out.numerator if out.denominator == 1 else out


def bracket_series(f: qs.TruncatedQSeries, g: qs.TruncatedQSeries, k, l, w: int):
    """The bracket of two bare series of weights k and l, to the smaller precision."""
    if w < 0:
        raise ValueError("bracket order must be non-negative")
    prec = min(f.prec, g.prec)
    f, g = f.truncate(prec), g.truncate(prec)
    total = qs.TruncatedQSeries.zero(prec)
    for j in range(w + 1):
        c = (-1) ** j * gen_binomial(Fraction(k) + w - 1, w - j) * gen_binomial(Fraction(l) + w - 1, j)
        if not c:
            continue
        term = qs.multiply(qs.hyperderivative(f, j), qs.hyperderivative(g, w - j))
        total = qs.linear_combine(1, total, c, term)
    return total


def _cohen_character(f: FormExpansion, g: FormExpansion):
    chi = multiply(f.character, g.character)
    hf, hg = f.half_integral, g.half_integral
    if not hf and not hg:
        return chi
    if hf and hg:
        e = (f.twice_weight + g.twice_weight) // 2
    else:
        e = f.twice_weight // 2 if not hf else g.twice_weight // 2
    return multiply(chi, power(make_kronecker(-4), e))


def bracket(f: FormExpansion, g: FormExpansion, w: int) -> FormExpansion:
    """[f, g]_w with weight k + l + 2w; precision is min of the inputs."""
    s = bracket_series(f.series, g.series, f.weight, g.weight, w)
    return FormExpansion(
        twice_weight=f.twice_weight + g.twice_weight + 4 * w,
        level=lcm(f.level, g.level),
        character=_cohen_character(f, g),
        series=s,
        cusp=w > 0 or (f.cusp or g.cusp),
    )


def _expand_lemma_left(k, w, v):
    top = k + 2 * w - 1 + v
    poly = defaultdict(Fraction)
    for j in range(w + 1):
        e = 2 * w - 2 * j + v
        c = Fraction(factorial(top), factorial(j) * factorial(e) * factorial(k + j - 1))
        # (xy)^j (x+y)^e
        for a in range(e + 1):
            poly[(j + a, j + e - a)] += c * comb(e, a)
    return {m: c for m, c in poly.items() if c}


def _expand_lemma_right(k, w, v):
    top = k + 2 * w - 1 + v
    deg = 2 * w + v
    poly = {}
    for j in range(deg + 1):
        c = comb(top, j) * comb(top, deg - j)
        if c:
            poly[(j, deg - j)] = Fraction(c)
    return poly


def lemma1_check(k: int, w: int, v: int) -> bool:
    """Compare both sides of the binomial identity as bivariate polynomials.

    Left:  sum_j (k+2w-1+v)! / (j! (2w-2j+v)! (k+j-1)!) (xy)^j (x+y)^{2w-2j+v}
    Right: sum_j C(k+2w-1+v, j) C(k+2w-1+v, 2w-j+v) x^j y^{2w-j+v}
    """
    if k < 1 or w < 0 or v not in (0, 1):
        raise ValueError("need k >= 1, w >= 0, v in {0, 1}")
    return _expand_lemma_left(k, w, v) == _expand_lemma_right(k, w, v)
