"""Elementary number theory on machine-independent Python integers."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, prod

from .errors import NotSquarefree

__all__ = [
    "bernoulli",
    "divisors",
    "factorize",
    "fundamental_discriminant_of",
    "is_fundamental_discriminant",
    "is_prime",
    "is_squarefree",
    "kronecker_symbol",
    "moebius",
    "radical",
    "sigma",
    "squarefree_part",
]


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple:
    """Trial-division factorization as ``((p, e), ...)`` with p increasing."""
    if n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n > 1 and factorize(n) == ((n, 1),)


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def radical(n: int) -> int:
    return prod(p for p, _ in factorize(n))


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for _, e in factorize(n))


def squarefree_part(n: int) -> int:
    """The squarefree s with n = s * m**2."""
    return prod(p for p, e in factorize(n) if e % 2)


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def sigma(n: int, k: int) -> int:
    return sum(d**k for d in divisors(n))


def kronecker_symbol(D: int, n: int) -> int:
    """The Kronecker symbol (D/n), with (D/-1) = sign(D) and (D/2) via D mod 8."""
    if n == 0:
        return 1 if D in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if D < 0:
            result = -1
    # strip factors of two from n
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if D % 2 == 0:
            return 0
        if v % 2 and D % 8 in (3, 5):
            result = -result
    # Jacobi symbol (D/n) for odd n > 0
    a = D % n if n > 1 else 0
    if n == 1:
        return result
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def fundamental_discriminant_of(t: int) -> int:
    """Discriminant of Q(sqrt t) for squarefree positive t (1 for t = 1)."""
    if not is_squarefree(t):
        raise NotSquarefree(f"{t} is not a squarefree positive integer")
    return t if t % 4 == 1 else 4 * t


def is_fundamental_discriminant(D: int) -> bool:
    if D == 1:
        return True
    if D % 4 == 1:
        return is_squarefree(abs(D))
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and is_squarefree(abs(m))
    return False


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """B_k with B_1 = -1/2, from sum_{j<=k} C(k+1, j) B_j = 0."""
    if k < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if k == 0:
        return Fraction(1)
    s = sum(comb(k + 1, j) * bernoulli(j) for j in range(k))
    return -s / (k + 1)

