"""
Exact rational and cyclotomic arithmetic.

Every coefficient in the package is a *ring value*: either a rational
number (``int`` or :class:`fractions.Fraction`) or a
:class:`CyclotomicElement`, an element of Q(zeta_m) stored in the power
basis 1, zeta_m, ..., zeta_m^(phi(m)-1) and reduced modulo the m-th
cyclotomic polynomial.

Rationals embed into every cyclotomic order, so ``int``/``Fraction`` may be
mixed freely with cyclotomic values.  Two cyclotomic values of different
orders may not be combined.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

from .errors import IncompatibleOrder, ParseError

__all__ = [
    "CyclotomicElement",
    "RingValue",
    "cyclotomic_polynomial",
    "embed_order",
    "embed_rational",
    "euler_phi",
    "format_value",
    "parse_value",
    "ring_arith",
    "ring_order",
]


def _norm(x):
    """Collapse integral fractions to ``int`` so the common case stays fast."""
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def euler_phi(m: int) -> int:
    result, n, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_divmod_exact(num, den):
    """Quotient of integer polynomials (low degree first); remainder must vanish."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(q) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Integer coefficients of Phi_m, lowest degree first.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divmod_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CyclotomicElement:
    """An element of Q(zeta_m) in canonical power-basis form.

    ``coeffs[i]`` is the coordinate on zeta_m^i; the tuple always has length
    phi(m).  Instances are immutable.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        n = euler_phi(order)
        coeffs = [_norm(Fraction(c)) if not isinstance(c, int) else c for c in coeffs]
        if len(coeffs) > n:
            coeffs = _reduce(coeffs, order)
        else:
            coeffs = coeffs + [0] * (n - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicElement is immutable")

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CyclotomicElement":
        """The root of unity zeta_order ** power."""
        power %= order
        return cls(order, [0] * power + [1])

    # -- predicates --------------------------------------------------------

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, CyclotomicElement):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if isinstance(other, CyclotomicElement):
            if other.order != self.order:
                raise IncompatibleOrder(
                    f"cannot combine orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, Rational):
            return None
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def __add__(self, other):
        try:
            o = self._check(other)
        except TypeError:
            return NotImplemented
        if o is None:
            c = list(self.coeffs)
            c[0] = _norm(c[0] + other)
            return CyclotomicElement(self.order, c)
        return CyclotomicElement(
            self.order, [_norm(a + b) for a, b in zip(self.coeffs, o.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        try:
            self._check(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._check(other)
        except TypeError:
            return NotImplemented
        if o is None:
            return CyclotomicElement(self.order, [_norm(a * other) for a in self.coeffs])
        a, b = self.coeffs, o.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicElement(self.order, _reduce(prod, self.order))

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only division by a rational scalar is supported
        if isinstance(other, Rational):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = CyclotomicElement(self.order, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        return format_value(self)


def _reduce(poly, order):
    """Remainder of ``poly`` modulo the monic polynomial Phi_order."""
    phi = cyclotomic_polynomial(order)
    n = len(phi) - 1
    poly = list(poly)
    for i in range(len(poly) - 1, n - 1, -1):
        c = poly[i]
        if c:
            poly[i] = 0
            for j in range(n):
                if phi[j]:
                    poly[i - n + j] -= c * phi[j]
    out = [_norm(c) for c in poly[:n]]
    return out + [0] * (n - len(out))


RingValue = Union[int, Fraction, CyclotomicElement]


def embed_rational(q, m: int) -> CyclotomicElement:
    """The rational ``q`` as a constant vector of order ``m``."""
    return CyclotomicElement(m, [q])


def embed_order(x, m: int):
    """Regard x, of cyclotomic order d, as an element of order m (d | m).

    Rationals are returned unchanged; they combine with any order.
    """
    if not isinstance(x, CyclotomicElement) or x.order == m:
        return x
    if m % x.order:
        raise IncompatibleOrder(f"order {x.order} does not divide {m}")
    step = m // x.order
    poly = [0] * (step * (len(x.coeffs) - 1) + 1)
    for i, c in enumerate(x.coeffs):
        poly[i * step] = c
    return CyclotomicElement(m, poly)


def ring_order(x) -> int:
    """Cyclotomic order of ``x``; 1 for rationals."""
    return x.order if isinstance(x, CyclotomicElement) else 1


def ring_arith(a, b, op: str):
    """Exact ``a op b`` for op in {"add", "sub", "mul"}."""
    if op == "add":
        r = a + b
    elif op == "sub":
        r = a - b
    elif op == "mul":
        r = a * b
    else:
        raise ValueError(f"unknown operation {op!r}")
    return _norm(r) if not isinstance(r, CyclotomicElement) else r


# -- serialization ---------------------------------------------------------

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")
_CYCLO = re.compile(r"^\[([^\]]*)\]@(\d+)$")


def _format_rational(q) -> str:
    return str(Fraction(q))


def format_value(x) -> str:
    """Text form: ``p/q`` for rationals, ``[c0,c1,...]@m`` for cyclotomics."""
    if isinstance(x, CyclotomicElement):
        return "[" + ",".join(_format_rational(c) for c in x.coeffs) + f"]@{x.order}"
    return _format_rational(x)


def _parse_rational(s: str):
    s = s.strip()
    if not _RATIONAL.match(s):
        raise ParseError(f"not a rational literal: {s!r}")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise ParseError(f"zero denominator: {s!r}")
    return _norm(Fraction(s))


def parse_value(s: str):
    """Inverse of :func:`format_value`."""
    s = s.strip()
    m = _CYCLO.match(s)
    if m:
        order = int(m.group(2))
        if order < 1:
            raise ParseError(f"bad cyclotomic order in {s!r}")
        parts = m.group(1).split(",") if m.group(1).strip() else []
        if len(parts) != euler_phi(order):
            raise ParseError(
                f"order {order} needs {euler_phi(order)} coordinates, got {len(parts)}"
            )
        return CyclotomicElement(order, [_parse_rational(p) for p in parts])
    return _parse_rational(s)
