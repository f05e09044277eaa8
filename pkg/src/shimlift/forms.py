"""
Modular form expansions and the operators acting on them.

A :class:`FormExpansion` is a truncated q-series tagged with twice its
weight, a level and a character.  The metadata follows the standard spaces
the constructors are known to land in; it is carried along, never verified.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd, lcm

from . import qseries as qs
from .arith import bernoulli, divisors, is_prime, moebius, sigma, squarefree_part
from .arith import fundamental_discriminant_of
from .characters import (
    DirichletCharacter,
    induce,
    make_kronecker,
    make_trivial,
    multiply,
    power,
)
from .errors import (
    HalfIntegralWeightUnsupported,
    NonIntegralEtaExponent,
    ParseError,
    PrecisionExceeded,
)
from .exact_ring import embed_order
from .qseries import TruncatedQSeries

__all__ = [
    "CheckResult",
    "FormExpansion",
    "apply_aI_bB",
    "builtin_form",
    "check_eigenform",
    "check_plus_space",
    "dilate",
    "eisenstein",
    "eta_quotient",
    "hecke_tp",
    "parse_eta_spec",
    "scale",
    "theta_series",
    "twist",
]


@dataclass(frozen=True)
class FormExpansion:
    twice_weight: int
    level: int
    character: DirichletCharacter
    series: TruncatedQSeries
    cusp: bool = False

    def __post_init__(self):
        if self.twice_weight < 1:
            raise ValueError(f"twice_weight must be >= 1, got {self.twice_weight}")
        if self.level < 1:
            raise ValueError("level must be positive")

    @property
    def weight(self) -> Fraction:
        return Fraction(self.twice_weight, 2)

    @property
    def half_integral(self) -> bool:
        return self.twice_weight % 2 == 1

    @property
    def prec(self) -> int:
        return self.series.prec

    def coefficient(self, n: int):
        return qs.coefficient(self.series, n)

    def with_series(self, series: TruncatedQSeries) -> "FormExpansion":
        return replace(self, series=series)

    def with_character(self, chi: DirichletCharacter, level: int | None = None):
        return replace(self, character=chi, level=self.level if level is None else level)


def _pentagonal(prec: int) -> TruncatedQSeries:
    """prod_{n>=1} (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}."""
    c = [0] * prec
    c[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 < prec:
        sign = -1 if k % 2 else 1
        for e in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if e < prec:
                c[e] += sign
        k += 1
    return TruncatedQSeries(c)


def parse_eta_spec(text: str) -> list:
    """``"1:4,5:4"`` -> ``[(1, 4), (5, 4)]``."""
    out = []
    for part in text.split(","):
        m = re.fullmatch(r"\s*(\d+)\s*:\s*(-?\d+)\s*", part)
        if not m:
            raise ParseError(f"bad eta factor {part!r}; expected <scale>:<exponent>")
        out.append((int(m.group(1)), int(m.group(2))))
    return out


def eta_quotient(spec, prec: int) -> FormExpansion:
    """prod_delta eta(delta z)^{r_delta} to precision ``prec``.

    ``spec`` is a list of ``(delta, r_delta)``.  The leading exponent
    sum(delta * r_delta) / 24 must be an integer.
    """
    spec = [(int(d), int(r)) for d, r in spec]
    scales = [d for d, _ in spec]
    if len(set(scales)) != len(scales) or any(d < 1 for d in scales):
        raise ValueError("eta scales must be distinct positive integers")
    if any(r == 0 for _, r in spec):
        raise ValueError("eta exponents must be nonzero")
    total = sum(d * r for d, r in spec)
    if total % 24:
        raise NonIntegralEtaExponent(
            f"sum of delta*r_delta = {total} is not divisible by 24"
        )
    shift = total // 24
    if shift < 0:
        raise ValueError("eta quotient with a pole at infinity is not a q-series")
    twice_weight = sum(r for _, r in spec)
    level = lcm(*scales)
    n = prec - shift
    if n <= 0:
        body = TruncatedQSeries.zero(prec)
    else:
        prod = TruncatedQSeries([1] + [0] * (n - 1))
        for d, r in spec:
            base = _pentagonal(-(-n // d))
            factor = qs.dilate(qs.unit_power(base, r), d).truncate(n)
            prod = qs.multiply(prod, factor).truncate(n)
        body = TruncatedQSeries([0] * shift + list(prod.coeffs))
    return FormExpansion(twice_weight, level, make_trivial(level), body, cusp=shift > 0)


def theta_series(psi: DirichletCharacter, d: int, prec: int) -> FormExpansion:
    """sum over n in Z of n^v psi(n) q^{d n^2}, v the parity of psi."""
    if d < 1:
        raise ValueError("theta dilation must be positive")
    v = psi.parity
    c = [0] * prec
    if v == 0 and psi.modulus == 1:
        c[0] = 1
    n = 1
    while d * n * n < prec:
        c[d * n * n] = 2 * n**v * psi(n)
        n += 1
    r = psi.modulus
    level = 4 * r * r * d
    chi_d = make_kronecker(fundamental_discriminant_of(squarefree_part(d)))
    chi = multiply(psi, chi_d, power(make_kronecker(-4), v))
    chi = induce(chi, level) if level % chi.modulus == 0 else chi
    return FormExpansion(2 * v + 1, level, chi, TruncatedQSeries(c), cusp=v == 1)


def eisenstein(k: int, prec: int) -> FormExpansion:
    """G_k = -B_k/(2k) + sum sigma_{k-1}(n) q^n (k = 2 gives the quasi-form)."""
    if k < 2 or k % 2:
        raise ValueError("Eisenstein weight must be even and >= 2")
    c = [-bernoulli(k) / (2 * k)] + [sigma(n, k - 1) for n in range(1, prec)]
    return FormExpansion(2 * k, 1, make_trivial(1), TruncatedQSeries(c[:prec]))


def scale(f: FormExpansion, a) -> FormExpansion:
    return f.with_series(f.series.scale(a))


def dilate(f: FormExpansion, l: int) -> FormExpansion:
    """f(lz); level metadata is multiplied by l."""
    if l == 1:
        return f
    return replace(f, series=qs.dilate(f.series, l), level=f.level * l)


def twist(f: FormExpansion, psi: DirichletCharacter) -> FormExpansion:
    """f_psi = sum psi(n) a(n) q^n."""
    m = lcm(f.series.order, psi.order if psi.order > 2 else 1)
    c = [
        embed_order(psi(n), m) * embed_order(x, m) if x else 0
        for n, x in enumerate(f.series.coeffs)
    ]
    chi = multiply(f.character, power(psi, 2))
    return replace(
        f,
        series=TruncatedQSeries(c),
        character=chi,
        level=f.level * psi.modulus**2,
    )


def apply_aI_bB(f: FormExpansion, a, b, l: int) -> FormExpansion:
    """f | (aI + bB(l)) = a f(z) + b f(lz)."""
    s = qs.linear_combine(a, f.series, b, qs.dilate(f.series, l))
    return replace(f, series=s, level=lcm(f.level, l * f.level))


def hecke_tp(f: FormExpansion, p: int) -> FormExpansion:
    """T_p on an integral-weight expansion: b(n) = a(pn) + chi(p) p^{k-1} a(n/p)."""
    if f.half_integral:
        raise HalfIntegralWeightUnsupported("T_p is only implemented for integral weight")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    k = f.twice_weight // 2
    a = f.series.coeffs
    out_prec = (f.prec - 1) // p + 1
    cp = f.character(p) * p ** (k - 1)
    c = []
    for n in range(out_prec):
        b = a[p * n]
        if n % p == 0 and cp:
            b = b + cp * a[n // p]
        c.append(b)
    return f.with_series(TruncatedQSeries(c))


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a coefficient-pattern check; falsy on failure."""

    ok: bool
    counterexample: tuple | int | None = None

    def __bool__(self):
        return self.ok


def check_eigenform(f: FormExpansion, bound: int, chi: DirichletCharacter | None = None) -> CheckResult:
    """Test a(1) = 1 and the multiplicativity relation

        a(mn) = sum_{d | gcd(m,n)} mu(d) chi(d) d^{k-1} a(m/d) a(n/d)

    for all 1 <= m, n <= bound.  ``chi`` defaults to the form's character.
    """
    if bound * bound >= f.prec:
        raise PrecisionExceeded(
            f"bound {bound} needs precision > {bound * bound}, have {f.prec}"
        )
    if f.half_integral:
        raise HalfIntegralWeightUnsupported("eigenform check needs integral weight")
    chi = f.character if chi is None else chi
    k = f.twice_weight // 2
    a = f.series.coeffs
    if a[1] != 1:
        return CheckResult(False, (1, 1))
    for m in range(1, bound + 1):
        for n in range(1, bound + 1):
            rhs = 0
            for d in divisors(gcd(m, n)):
                mu = moebius(d)
                if mu:
                    rhs += mu * chi(d) * d ** (k - 1) * a[m // d] * a[n // d]
            if a[m * n] != rhs:
                return CheckResult(False, (m, n))
    return CheckResult(True)


def check_plus_space(f: FormExpansion, k_plus_v: int) -> CheckResult:
    """Every nonzero a(n) has (-1)^{k+v} n = 0 or 1 mod 4."""
    sign = -1 if k_plus_v % 2 else 1
    for n, _ in f.series.nonzero():
        if (sign * n) % 4 not in (0, 1):
            return CheckResult(False, n)
    return CheckResult(True)


_BUILTIN_ETA = {
    "delta": [(1, 24)],
    "f4l5": [(1, 4), (5, 4)],
}


def builtin_form(name: str, prec: int) -> FormExpansion:
    """Resolve ``delta``, ``f4l5`` or ``G<k>`` (with or without ``builtin:``)."""
    if name.startswith("builtin:"):
        name = name[len("builtin:"):]
    if name in _BUILTIN_ETA:
        return eta_quotient(_BUILTIN_ETA[name], prec)
    m = re.fullmatch(r"G(\d+)", name)
    if m:
        return eisenstein(int(m.group(1)), prec)
    raise KeyError(f"unknown built-in form {name!r}")
