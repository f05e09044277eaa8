"""Command-line front end: ``python -m shimlift <command> ...``.

Exit status is 0 on success or a passing verification, 1 when a
verification finds a mismatch, and 2 on usage, parse, precision or
hypothesis errors.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import redirect_stderr, redirect_stdout

from . import forms as fm
from .characters import parse_character
from .errors import HypothesisViolated, InsufficientPrecision, ParseError, ShimliftError
from .exact_ring import parse_value
from .qexp_file import parse_qexp, write_qexp
from .rankin_cohen import bracket
from .shimura import kohnen_lift, shimura_lift
from .theorems import build_g, verify


class UsageError(Exception):
    pass


def _read_source(source: str, prec, stdin):
    if source.startswith("builtin:"):
        if prec is None:
            raise UsageError(f"--prec is required to build {source}")
        try:
            return fm.builtin_form(source, prec)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    if source == "-":
        return parse_qexp(stdin.read())
    try:
        with open(source) as fh:
            return parse_qexp(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def _input_form(args, stdin, prec=None):
    source = args.form or args.input
    if source is None:
        raise UsageError("an input is required: --in FILE|- or --form builtin:<name>")
    return _read_source(source, prec, stdin)


def _add_input(p):
    p.add_argument("--in", dest="input", help="q-expansion file, or - for stdin")
    p.add_argument("--form", help="built-in form, e.g. builtin:delta")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shimlift",
        description="Exact q-expansions, Rankin-Cohen brackets and Shimura lifts.",
    )
    parser.add_argument("--out", help="write output here instead of stdout")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eta", parents=[common], help="eta quotient")
    p.add_argument("--spec", required=True, help='scale:exponent list, e.g. "1:4,5:4"')
    p.add_argument("--prec", type=int, required=True)

    p = sub.add_parser("theta", parents=[common], help="theta series theta_psi(dz)")
    p.add_argument("--psi", default="trivial:1")
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--prec", type=int, required=True)

    p = sub.add_parser("eisenstein", parents=[common], help="Eisenstein series G_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--prec", type=int, required=True)

    p = sub.add_parser("bracket", parents=[common], help="Rankin-Cohen bracket [f, g]_w")
    p.add_argument("--f", required=True, help="file, - or builtin:<name>")
    p.add_argument("--g", required=True, help="file, - or builtin:<name>")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--prec", type=int)

    p = sub.add_parser("twist", parents=[common], help="twist by a character")
    _add_input(p)
    p.add_argument("--psi", required=True)
    p.add_argument("--prec", type=int)

    p = sub.add_parser("dilate", parents=[common], help="f(z) -> f(lz)")
    _add_input(p)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--prec", type=int)

    p = sub.add_parser("apply-op", parents=[common], help="f | (aI + bB(l))")
    _add_input(p)
    p.add_argument("--a", default="1")
    p.add_argument("--b", default="0")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--prec", type=int)

    p = sub.add_parser("hecke", parents=[common], help="Hecke operator T_p")
    _add_input(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--prec", type=int)

    p = sub.add_parser("lift", parents=[common], help="Shimura lift S_t")
    _add_input(p)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--prec", type=int, required=True, help="output precision")

    p = sub.add_parser("kohnen-lift", parents=[common], help="Kohnen lift S_D^+")
    _add_input(p)
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--prec", type=int, required=True, help="output precision")
    p.add_argument("--normalizer", help="rational normalizer (default: a(D) of the input)")

    p = sub.add_parser("build-g", parents=[common], help="sum of psi_d(-1) [f(rz/d), f(dz)]_order")
    p.add_argument("--f", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--prec", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="check a lift identity numerically")
    p.add_argument("statement", choices=["thm1", "thm2", "thm3", "lemma1", "selberg"])
    p.add_argument("--f", default="builtin:delta")
    for name in ("N", "r", "t", "D", "w", "M", "kmax", "wmax"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--chi")
    p.add_argument("--psi")
    p.add_argument("--prec", type=int, default=20)
    p.add_argument("--eigen-bound", type=int, default=10)

    p = sub.add_parser("show", parents=[common], help="print a q-expansion in readable form")
    _add_input(p)
    p.add_argument("--prec", type=int)
    return parser


def _show(f) -> str:
    lines = [
        f"weight {f.weight} level {f.level} character {f.character.label}"
        + (" (cusp)" if f.cusp else ""),
        repr(f.series),
    ]
    return "\n".join(lines) + "\n"


def _verify_params(args) -> dict:
    params = {"f": args.f, "eigen_bound": args.eigen_bound}
    for name in ("N", "r", "t", "D", "w", "M", "kmax", "wmax", "chi", "psi"):
        val = getattr(args, name)
        if val is not None:
            params[name] = val
    return params


def _run(args, stdin):
    """Returns (exit_code, text)."""
    cmd = args.command
    if cmd == "eta":
        return 0, write_qexp(fm.eta_quotient(fm.parse_eta_spec(args.spec), args.prec))
    if cmd == "theta":
        return 0, write_qexp(fm.theta_series(parse_character(args.psi), args.d, args.prec))
    if cmd == "eisenstein":
        return 0, write_qexp(fm.eisenstein(args.k, args.prec))
    if cmd == "bracket":
        f = _read_source(args.f, args.prec, stdin)
        g = _read_source(args.g, args.prec, stdin)
        return 0, write_qexp(bracket(f, g, args.w))
    if cmd == "build-g":
        f = _read_source(args.f, args.prec, stdin)
        psi = parse_character(args.psi)
        return 0, write_qexp(build_g(f, args.r, psi, args.order, args.prec))
    if cmd == "verify":
        report = verify(args.statement, _verify_params(args), args.prec)
        text = report.format() + "\n"
        if report.error is not None:
            return 2, text
        return (0 if report.passed else 1), text

    f = _input_form(args, stdin, getattr(args, "prec", None))
    if cmd == "twist":
        out = fm.twist(f, parse_character(args.psi))
    elif cmd == "dilate":
        out = fm.dilate(f, args.l)
    elif cmd == "apply-op":
        out = fm.apply_aI_bB(f, parse_value(args.a), parse_value(args.b), args.l)
    elif cmd == "hecke":
        out = fm.hecke_tp(f, args.p)
    elif cmd == "lift":
        out = shimura_lift(f, args.t, args.prec)
    elif cmd == "kohnen-lift":
        c = parse_value(args.normalizer) if args.normalizer else None
        out = kohnen_lift(f, args.D, args.prec, normalizer=c)
    elif cmd == "show":
        return 0, _show(f)
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown command {cmd}")
    return 0, write_qexp(out)


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = _build_parser()
    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = _run(args, stdin)
    except (UsageError, ParseError, InsufficientPrecision, HypothesisViolated) as exc:
        print(f"shimlift: error: {exc}", file=stderr)
        return 2
    except (ShimliftError, ValueError, KeyError) as exc:
        print(f"shimlift: error: {exc}", file=stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if code == 2:
        print("shimlift: error: verification could not run", file=stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
