"""
Reading and writing the ``# qexp 1`` text format.

Example::

    # qexp 1
    # twice_weight 8
    # level 5
    # character trivial:5
    # order 1
    # prec 10
    # cusp 1
    1 1
    2 -4

Header lines are ``# <key> <value>``; ``qexp``, ``twice_weight`` and ``prec``
are required, the rest default to level 1, ``trivial:1``, order 1, cusp 0.
Body lines ``n value`` list the nonzero coefficients with strictly
increasing n; absent indices are zero.
"""

from __future__ import annotations

from .characters import parse_character
from .errors import DuplicateIndex, IndexOutOfRange, ParseError
from .exact_ring import CyclotomicElement, format_value, parse_value
from .forms import FormExpansion
from .qseries import TruncatedQSeries

__all__ = ["FORMAT_VERSION", "parse_qexp", "write_qexp"]

FORMAT_VERSION = "1"
_KEYS = ("qexp", "twice_weight", "level", "character", "order", "prec", "cusp")


def write_qexp(f: FormExpansion) -> str:
    """Canonical text: fixed header order, nonzero coefficients only."""
    lines = [
        f"# qexp {FORMAT_VERSION}",
        f"# twice_weight {f.twice_weight}",
        f"# level {f.level}",
        f"# character {f.character.label}",
        f"# order {f.series.order}",
        f"# prec {f.prec}",
        f"# cusp {int(f.cusp)}",
    ]
    for n, x in f.series.nonzero():
        lines.append(f"{n} {format_value(x)}")
    return "\n".join(lines) + "\n"


def _int_field(header, key, default=None):
    if key not in header:
        if default is None:
            raise ParseError(f"missing header field {key!r}")
        return default
    val, line = header[key]
    try:
        return int(val)
    except ValueError:
        raise ParseError(f"header {key!r} is not an integer: {val!r}", line) from None


def parse_qexp(text: str) -> FormExpansion:
    header = {}
    body = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split(None, 1)
            if len(parts) != 2 or parts[0] not in _KEYS:
                raise ParseError(f"bad header line {raw!r}", lineno)
            if parts[0] in header:
                raise ParseError(f"repeated header field {parts[0]!r}", lineno)
            if body:
                raise ParseError("header line after body", lineno)
            header[parts[0]] = (parts[1].strip(), lineno)
            continue
        parts = line.split(None, 1)
        if len(parts) != 2:
            raise ParseError(f"expected '<n> <value>', got {raw!r}", lineno)
        body.append((lineno, parts[0], parts[1]))

    if header.get("qexp", (None,))[0] != FORMAT_VERSION:
        raise ParseError(f"missing or unsupported '# qexp {FORMAT_VERSION}' header")
    prec = _int_field(header, "prec")
    twice_weight = _int_field(header, "twice_weight")
    level = _int_field(header, "level", default=1)
    order = _int_field(header, "order", default=1)
    cusp = _int_field(header, "cusp", default=0)
    if prec < 1:
        raise ParseError("prec must be positive", header["prec"][1])
    chi_text, chi_line = header.get("character", ("trivial:1", None))
    try:
        chi = parse_character(chi_text)
    except ParseError as exc:
        raise ParseError(str(exc), chi_line) from None

    coeffs = [0] * prec
    seen = set()
    last = -1
    for lineno, n_text, v_text in body:
        try:
            n = int(n_text)
        except ValueError:
            raise ParseError(f"bad index {n_text!r}", lineno) from None
        if n < 0 or n >= prec:
            raise IndexOutOfRange(f"index {n} outside 0..{prec - 1}", lineno)
        if n in seen:
            raise DuplicateIndex(f"index {n} appears twice", lineno)
        if n < last:
            raise ParseError(f"index {n} after {last}; indices must increase", lineno)
        try:
            value = parse_value(v_text)
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        if isinstance(value, CyclotomicElement) and value.order != order:
            raise ParseError(
                f"value of order {value.order} in a file of order {order}", lineno
            )
        coeffs[n] = value
        seen.add(n)
        last = n
    try:
        return FormExpansion(twice_weight, level, chi, TruncatedQSeries(coeffs), bool(cusp))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
