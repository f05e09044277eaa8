"""
Dirichlet characters with exact values.

A character modulo r is stored through its prime-power components: for each
q = p^a exactly dividing r, the images of a fixed generator set of
(Z/qZ)^x, written as exponents x in Q/Z (the generator maps to
exp(2 pi i x)).  Values are returned as ``int`` when the character order is
at most 2 and as :class:`~shimlift.exact_ring.CyclotomicElement` of the
character order otherwise.

Characters compare equal when they have the same modulus and agree on a
full period.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from math import gcd, lcm

from .arith import factorize, kronecker_symbol
from .errors import BadUnitaryDivisor, NotADiscriminant, NotDivisible, ParseError
from .exact_ring import CyclotomicElement

__all__ = [
    "DirichletCharacter",
    "component_psi_d",
    "decompose",
    "eval_char",
    "induce",
    "make_kronecker",
    "make_trivial",
    "multiply",
    "parse_character",
    "power",
    "unit_group",
]


@lru_cache(maxsize=None)
def unit_group(p: int, a: int):
    """Generators, their orders, and a discrete-log table of (Z/p^a)^x.

    Odd p uses the least primitive root; 2^a (a >= 3) uses -1 and 5.
    The table maps each unit residue to its exponent vector.
    """
    q = p**a
    if p == 2:
        if a == 1:
            return (), (), {1: ()}
        if a == 2:
            return (3,), (2,), {1: (0,), 3: (1,)}
        gens, orders = (q - 1, 5), (2, q // 4)
        table = {}
        x = 1
        for e1 in range(q // 4):
            table[x] = (0, e1)
            table[(-x) % q] = (1, e1)
            x = x * 5 % q
        return gens, orders, table
    phi = q - q // p
    for g in range(2, q):
        if g % p == 0:
            continue
        table, x = {}, 1
        for e in range(phi):
            if x in table:
                break
            table[x] = (e,)
            x = x * g % q
        if len(table) == phi:
            return (g,), (phi,), table
    # q = p^a with p odd always has a primitive root; q = 3 -> g = 2
    raise AssertionError("no primitive root found")


@dataclass(frozen=True)
class _Component:
    p: int
    a: int
    images: tuple  # Fraction exponents in [0, 1), one per generator

    @property
    def q(self) -> int:
        return self.p**self.a

    def exponent(self, n: int) -> Fraction:
        """exp(2 pi i * result) is the component's value at the unit n."""
        _, _, table = unit_group(self.p, self.a)
        logs = table[n % self.q]
        return sum((x * e for x, e in zip(self.images, logs)), Fraction(0)) % 1


def _component_from_exponents(p, a, expfn):
    gens, _, _ = unit_group(p, a)
    return _Component(p, a, tuple(Fraction(expfn(g)) % 1 for g in gens))


class DirichletCharacter:
    """A Dirichlet character modulo ``modulus``.

    Build instances with :func:`make_trivial`, :func:`make_kronecker`,
    :meth:`from_images`, or the combinators :func:`multiply`,
    :func:`induce`, :func:`power`.
    """

    def __init__(self, modulus: int, components, label: str | None = None):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        comps = tuple(sorted(components, key=lambda c: c.p))
        if reduce(lambda x, c: x * c.q, comps, 1) != modulus:
            raise ValueError("components do not multiply to the modulus")
        self.modulus = modulus
        self.components = comps
        self._label = label

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_images(cls, modulus: int, images: dict) -> "DirichletCharacter":
        """Character with given generator images per prime power.

        ``images`` maps each prime power q exactly dividing the modulus to the
        list of exponents (in Q/Z) of the generators from :func:`unit_group`.
        Missing prime powers get the trivial component.
        """
        comps = []
        for p, a in factorize(modulus) if modulus > 1 else ():
            gens, orders, _ = unit_group(p, a)
            x = [Fraction(v) % 1 for v in images.get(p**a, [0] * len(gens))]
            if len(x) != len(gens):
                raise ValueError(f"modulus {p**a} needs {len(gens)} generator images")
            for xi, o in zip(x, orders):
                if (xi * o).denominator != 1:
                    raise ValueError(f"image {xi} incompatible with generator order {o}")
            comps.append(_Component(p, a, tuple(x)))
        return cls(modulus, comps)

    # -- basic data --------------------------------------------------------

    @cached_property
    def order(self) -> int:
        return lcm(1, *(x.denominator for c in self.components for x in c.images))

    @cached_property
    def _table(self) -> tuple:
        r, m = self.modulus, self.order
        vals = []
        for n in range(r):
            if gcd(n, r) != 1:
                vals.append(0)
                continue
            e = sum((c.exponent(n) for c in self.components), Fraction(0)) % 1
            vals.append(_root_of_unity(m, int(e * m)))
        return tuple(vals)

    def __call__(self, n: int):
        return self._table[n % self.modulus]

    @cached_property
    def parity(self) -> int:
        """v in {0, 1} with chi(-1) = (-1)^v."""
        return 0 if self(-1) == 1 else 1

    def is_real(self) -> bool:
        return self.order <= 2

    @property
    def label(self) -> str:
        """A character literal that :func:`parse_character` accepts."""
        if self._label is not None:
            return self._label
        parts = []
        for c in self.components:
            parts.append(f"{c.q}=" + "|".join(str(x) for x in c.images))
        return f"images:{self.modulus}:" + ";".join(parts)

    def __eq__(self, other):
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return self.modulus == other.modulus and self._table == other._table

    def __hash__(self):
        return hash((self.modulus, self._table))

    def __repr__(self):
        return f"DirichletCharacter({self.label!r}, modulus={self.modulus}, order={self.order})"


def _root_of_unity(m: int, j: int):
    if m == 1:
        return 1
    if m == 2:
        return 1 if j % 2 == 0 else -1
    return CyclotomicElement.zeta(m, j)


def eval_char(psi: DirichletCharacter, n: int):
    """psi(n), exactly; zero when gcd(n, modulus) > 1."""
    return psi(n)


def _combine(modulus: int, factors, label=None) -> DirichletCharacter:
    """The character mod ``modulus`` equal to prod psi_i^e_i on units.

    Every factor's modulus must divide ``modulus``.
    """
    comps = []
    for p, a in factorize(modulus) if modulus > 1 else ():

        def expfn(g, p=p):
            total = Fraction(0)
            for psi, e in factors:
                for c in psi.components:
                    if c.p == p:
                        total += e * c.exponent(g)
            return total

        comps.append(_component_from_exponents(p, a, expfn))
    return DirichletCharacter(modulus, comps, label)


def make_trivial(d: int) -> DirichletCharacter:
    """The principal character chi_{0,d}."""
    return _combine(d, [], label=f"trivial:{d}")


def make_kronecker(D: int) -> DirichletCharacter:
    """n -> (D/n) as a character modulo |D|."""
    if D == 0 or D % 4 not in (0, 1):
        raise NotADiscriminant(f"{D} is not congruent to 0 or 1 mod 4")
    r = abs(D)
    comps = []
    for p, a in factorize(r) if r > 1 else ():
        q = p**a
        rest = r // q
        gens, _, _ = unit_group(p, a)
        images = []
        for g in gens:
            # lift g to n = g mod q, n = 1 mod r/q
            n = (g * rest * pow(rest, -1, q) + q * pow(q, -1, rest)) % r if rest > 1 else g
            images.append(Fraction(0) if kronecker_symbol(D, n) == 1 else Fraction(1, 2))
        comps.append(_Component(p, a, tuple(images)))
    return DirichletCharacter(r, comps, label=f"kronecker:{D}")


def multiply(*chars: DirichletCharacter) -> DirichletCharacter:
    """Pointwise product, modulo the lcm of the moduli."""
    m = lcm(1, *(c.modulus for c in chars))
    out = _combine(m, [(c, 1) for c in chars])
    if out.order == 1:
        return _relabel(out, f"trivial:{m}")
    nontrivial = [c for c in chars if c.order > 1]
    if len(nontrivial) == 1:
        label = nontrivial[0].label
        if nontrivial[0].modulus != m:
            label = f"induce({label},{m})"
    else:
        label = "prod(" + ",".join(c.label for c in nontrivial) + ")"
    return _relabel(out, label)


def power(psi: DirichletCharacter, e: int) -> DirichletCharacter:
    """psi**e on units, same modulus (e may be negative or zero)."""
    if e == 1:
        return psi
    out = _combine(psi.modulus, [(psi, e)])
    if out.order == 1:
        return _relabel(out, f"trivial:{psi.modulus}")
    if out == psi:
        return psi
    return out


def _relabel(psi: DirichletCharacter, label: str) -> DirichletCharacter:
    return DirichletCharacter(psi.modulus, psi.components, label)


def induce(psi: DirichletCharacter, M: int) -> DirichletCharacter:
    """psi regarded as a character modulo a multiple M of its modulus."""
    if M % psi.modulus:
        raise NotDivisible(f"modulus {psi.modulus} does not divide {M}")
    if M == psi.modulus:
        return psi
    return _combine(M, [(psi, 1)], label=f"induce({psi.label},{M})")


def decompose(psi: DirichletCharacter) -> list:
    """Prime-power components ``[(q, psi_q), ...]`` whose product is psi."""
    return [(c.q, DirichletCharacter(c.q, [c])) for c in psi.components]


def component_psi_d(psi: DirichletCharacter, d: int) -> DirichletCharacter:
    """Product of the components of psi at the primes dividing d.

    d must be a unitary divisor of the modulus: d | r and gcd(d, r/d) = 1.
    """
    r = psi.modulus
    if d < 1 or r % d or gcd(d, r // d) != 1:
        raise BadUnitaryDivisor(f"{d} is not a unitary divisor of {r}")
    return DirichletCharacter(d, [c for c in psi.components if d % c.p == 0])


# -- character literals ----------------------------------------------------

_INT = re.compile(r"^-?\d+$")


def _split_args(s: str) -> list:
    out, depth, cur = [], 0, []
    for ch in s:
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        cur.append(ch)
    out.append("".join(cur))
    return out


def parse_character(text: str) -> DirichletCharacter:
    """Parse a character literal.

    Grammar: ``trivial:<d>``, ``kronecker:<D>``, ``prod(<spec>,...)``,
    ``induce(<spec>,<M>)`` and ``images:<r>:<q>=<x>|..;<q>=..`` for
    characters given by generator images.
    """
    s = text.strip()
    try:
        if s.startswith("trivial:") and _INT.match(s[8:]):
            return make_trivial(int(s[8:]))
        if s.startswith("kronecker:") and _INT.match(s[10:]):
            return make_kronecker(int(s[10:]))
        if s.startswith("prod(") and s.endswith(")"):
            args = _split_args(s[5:-1])
            return multiply(*(parse_character(a) for a in args))
        if s.startswith("induce(") and s.endswith(")"):
            args = _split_args(s[7:-1])
            if len(args) != 2 or not _INT.match(args[1].strip()):
                raise ParseError(f"bad induce literal {s!r}")
            return induce(parse_character(args[0]), int(args[1]))
        if s.startswith("images:"):
            _, r, body = s.split(":", 2)
            images = {}
            for part in filter(None, body.split(";")):
                q, xs = part.split("=")
                images[int(q)] = [Fraction(x) for x in xs.split("|") if x]
            return DirichletCharacter.from_images(int(r), images)
    except ParseError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad character literal {s!r}: {exc}") from exc
    raise ParseError(f"unrecognised character literal {s!r}")
