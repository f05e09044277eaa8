"""
Shimura and Kohnen lifts as finite Dirichlet convolutions.

For F = sum a(n) q^n of weight K + 1/2 and character X,

    S_t(F):   A_t(n) = sum_{d | n} (X chi_{-4}^K chi_t)(d) d^{K-1} a(t (n/d)^2)
    S_D^+(F): A_D(n) = c^{-1} sum_{d | n} (X chi_D)(d) d^{K-1} a(D (n/d)^2)

where c is the normalizer (by default a(D)).  Both need the input known to
precision greater than t (P - 1)^2 for P output coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import divisors, fundamental_discriminant_of, is_fundamental_discriminant
from .arith import is_squarefree
from .characters import DirichletCharacter, make_kronecker, multiply, power
from .errors import (
    InsufficientPrecision,
    NotFundamental,
    NotSquarefree,
    VanishingNormalizer,
)
from .forms import FormExpansion
from .qseries import TruncatedQSeries

__all__ = [
    "kohnen_lift",
    "lift_convolution",
    "required_input_precision",
    "shimura_character",
    "shimura_lift",
]


def required_input_precision(t: int, out_prec: int) -> int:
    """Smallest input precision that determines ``out_prec`` lifted coefficients."""
    return t * (out_prec - 1) ** 2 + 1


def _half_weight(F: FormExpansion) -> int:
    if not F.half_integral or F.twice_weight < 3:
        raise ValueError("the lift needs half-integral weight K + 1/2 with K >= 1")
    return (F.twice_weight - 1) // 2


def lift_convolution(a, chi: DirichletCharacter, K: int, t: int, out_prec: int) -> list:
    """[A(0)=0, A(1), ...] with A(n) = sum_{d|n} chi(d) d^{K-1} a[t (n/d)^2]."""
    out = [0]
    for n in range(1, out_prec):
        s = 0
        for d in divisors(n):
            c = chi(d)
            if c:
                x = a[t * (n // d) ** 2]
                if x:
                    s = s + c * d ** (K - 1) * x
        out.append(s)
    return out


def _check_precision(F, t, out_prec):
    need = required_input_precision(t, out_prec)
    if F.prec < need:
        raise InsufficientPrecision(
            f"lifting {out_prec} coefficients with t={t} needs input precision "
            f"{need}, got {F.prec}",
            required=need,
        )


def shimura_character(F: FormExpansion, t: int) -> DirichletCharacter:
    """X chi_{-4}^K chi_t for the input's character X."""
    K = _half_weight(F)
    chi_t = make_kronecker(fundamental_discriminant_of(t))
    return multiply(F.character, power(make_kronecker(-4), K), chi_t)


def shimura_lift(F: FormExpansion, t: int, out_prec: int) -> FormExpansion:
    """S_t(F) to precision ``out_prec``; weight 2K, character X^2, A_t(0) = 0."""
    if not is_squarefree(t):
        raise NotSquarefree(f"t = {t} is not squarefree")
    K = _half_weight(F)
    _check_precision(F, t, out_prec)
    chi = shimura_character(F, t)
    coeffs = lift_convolution(F.series.coeffs, chi, K, t, out_prec)
    return FormExpansion(
        twice_weight=2 * K,
        level=F.level // 2 if F.level % 4 == 0 else F.level,
        character=power(F.character, 2),
        series=TruncatedQSeries(coeffs),
        cusp=K >= 2,
    )


def kohnen_lift(F: FormExpansion, D: int, out_prec: int, normalizer=None) -> FormExpansion:
    """S_D^+(F) for a positive fundamental discriminant D.

    ``normalizer`` defaults to a(D), the input's own coefficient; it must be
    a nonzero rational.
    """
    if D < 1 or not is_fundamental_discriminant(D):
        raise NotFundamental(f"{D} is not a positive fundamental discriminant")
    K = _half_weight(F)
    _check_precision(F, D, out_prec)
    c = F.series.coeffs[D] if normalizer is None else normalizer
    if not c:
        raise VanishingNormalizer(f"normalizer a({D}) vanishes")
    if not isinstance(c, (int, Fraction)):
        raise TypeError("the normalizer must be rational")
    chi = multiply(F.character, make_kronecker(D))
    coeffs = lift_convolution(F.series.coeffs, chi, K, D, out_prec)
    inv = Fraction(1) / Fraction(c)
    return FormExpansion(
        twice_weight=2 * K,
        level=F.level,
        character=power(F.character, 2),
        series=TruncatedQSeries(x * inv for x in coeffs),
        cusp=True,
    )
