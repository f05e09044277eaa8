"""
Truncated q-expansions with exact coefficients.

A :class:`TruncatedQSeries` holds c_0, ..., c_{P-1} of a formal series known
modulo q^P.  Every operation states the precision of its result, and reading
a coefficient at or beyond the precision raises
:class:`~shimlift.errors.PrecisionExceeded` instead of returning zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import IncompatibleOrder, PrecisionExceeded
from .exact_ring import CyclotomicElement, _norm, format_value

__all__ = [
    "TruncatedQSeries",
    "coefficient",
    "dilate",
    "hyperderivative",
    "linear_combine",
    "multiply",
    "unit_power",
]


def _clean(x):
    return x if isinstance(x, CyclotomicElement) else _norm(x)


class TruncatedQSeries:
    """Coefficients ``coeffs[n]`` of q^n for 0 <= n < prec."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        c = tuple(_clean(x) for x in coeffs)
        if not c:
            raise ValueError("a truncated series needs positive precision")
        orders = {x.order for x in c if isinstance(x, CyclotomicElement)}
        if len(orders) > 1:
            raise IncompatibleOrder(f"mixed cyclotomic orders {sorted(orders)}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedQSeries is immutable")

    @classmethod
    def zero(cls, prec: int) -> "TruncatedQSeries":
        return cls([0] * prec)

    @classmethod
    def from_dict(cls, terms: dict, prec: int) -> "TruncatedQSeries":
        c = [0] * prec
        for n, v in terms.items():
            if 0 <= n < prec:
                c[n] = v
        return cls(c)

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    @property
    def order(self) -> int:
        """Common cyclotomic order of the coefficients (1 if all rational)."""
        for x in self.coeffs:
            if isinstance(x, CyclotomicElement):
                return x.order
        return 1

    def valuation(self) -> int:
        """Index of the first nonzero coefficient; ``prec`` for the zero series."""
        for n, x in enumerate(self.coeffs):
            if x:
                return n
        return self.prec

    def nonzero(self):
        return [(n, x) for n, x in enumerate(self.coeffs) if x]

    def __getitem__(self, n: int):
        return coefficient(self, n)

    def truncate(self, prec: int) -> "TruncatedQSeries":
        if prec > self.prec:
            raise PrecisionExceeded(f"cannot extend precision {self.prec} to {prec}")
        return TruncatedQSeries(self.coeffs[:prec])

    def agrees_with(self, other: "TruncatedQSeries", upto: int | None = None) -> bool:
        """Coordinate-wise equality on indices below the common precision."""
        p = min(self.prec, other.prec) if upto is None else upto
        if p > min(self.prec, other.prec):
            raise PrecisionExceeded(f"cannot compare to precision {p}")
        return self.coeffs[:p] == other.coeffs[:p]

    def __eq__(self, other):
        if not isinstance(other, TruncatedQSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # operator sugar
    def __add__(self, other):
        return linear_combine(1, self, 1, other)

    def __sub__(self, other):
        return linear_combine(1, self, -1, other)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, TruncatedQSeries):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, a) -> "TruncatedQSeries":
        return TruncatedQSeries(a * x for x in self.coeffs)

    def __repr__(self):
        terms = []
        for n, x in self.nonzero():
            terms.append(format_value(x) + ("" if n == 0 else f"*q^{n}"))
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.prec})"


def coefficient(f: TruncatedQSeries, n: int):
    """c_n of f; raises PrecisionExceeded for n >= prec."""
    if n < 0:
        raise IndexError("coefficient index must be non-negative")
    if n >= f.prec:
        raise PrecisionExceeded(f"q^{n} is beyond precision {f.prec}")
    return f.coeffs[n]


def linear_combine(a, f: TruncatedQSeries, b, g: TruncatedQSeries) -> TruncatedQSeries:
    """a*f + b*g to the smaller of the two precisions."""
    p = min(f.prec, g.prec)
    return TruncatedQSeries(a * x + b * y for x, y in zip(f.coeffs[:p], g.coeffs[:p]))


def multiply(f: TruncatedQSeries, g: TruncatedQSeries) -> TruncatedQSeries:
    """Cauchy product.

    The result is known modulo q^P with
    P = min(P_f + ord g, P_g + ord f, P_f + P_g - 1).
    """
    vf, vg = f.valuation(), g.valuation()
    p = min(f.prec + vg, g.prec + vf, f.prec + g.prec - 1)
    out = [0] * p
    gnz = g.nonzero()
    for i, x in f.nonzero():
        for j, y in gnz:
            if i + j >= p:
                break
            out[i + j] += x * y
    return TruncatedQSeries(out)


def hyperderivative(f: TruncatedQSeries, j: int) -> TruncatedQSeries:
    """(q d/dq)^j f: coefficient n is multiplied by n**j."""
    if j < 0:
        raise ValueError("derivative order must be non-negative")
    if j == 0:
        return f
    return TruncatedQSeries(n**j * x if x else 0 for n, x in enumerate(f.coeffs))


def dilate(f: TruncatedQSeries, l: int) -> TruncatedQSeries:
    """f(q^l); the precision becomes l * prec."""
    if l < 1:
        raise ValueError("dilation factor must be positive")
    if l == 1:
        return f
    out = [0] * (l * f.prec)
    out[::l] = f.coeffs
    return TruncatedQSeries(out)


def unit_power(f: TruncatedQSeries, a: int) -> TruncatedQSeries:
    """f**a for a series with constant term 1 and any integer a.

    Uses the recurrence n c_n = sum_{k=1}^n ((a+1)k - n) f_k c_{n-k} that
    follows from f * (f^a)' = a f' * f^a; precision is unchanged.
    """
    if f.coeffs[0] != 1:
        raise ValueError("unit_power needs constant term 1")
    fc = f.coeffs
    nz = [(k, x) for k, x in enumerate(fc) if k and x]
    c = [1] + [0] * (f.prec - 1)
    for n in range(1, f.prec):
        s = 0
        for k, x in nz:
            if k > n:
                break
            s += ((a + 1) * k - n) * x * c[n - k]
        if isinstance(s, int):
            q, r = divmod(s, n)
            c[n] = q if r == 0 else Fraction(s, n)
        else:
            c[n] = _clean(s / n)
    return TruncatedQSeries(c)

