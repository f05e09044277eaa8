"""
Both sides of the lift identities for brackets of eigenforms and theta series.

Each ``*_sides`` builder returns ``(lhs, rhs)``: the lhs is the lift of the
half-integral bracket, the rhs the closed form built from brackets of the
eigenform with itself.  :func:`verify` drives a builder at a requested
precision and compares coefficients 1..prec-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Callable, Mapping

from . import forms as fm
from .arith import divisors, factorize, fundamental_discriminant_of
from .arith import is_fundamental_discriminant, is_squarefree
from .characters import (
    DirichletCharacter,
    component_psi_d,
    induce,
    make_kronecker,
    make_trivial,
    multiply,
    parse_character,
    power,
)
from .errors import HypothesisViolated, InsufficientPrecision, PrecisionExceeded, ShimliftError
from .forms import FormExpansion
from .qseries import TruncatedQSeries
from .rankin_cohen import bracket, lemma1_check
from .shimura import kohnen_lift, required_input_precision, shimura_lift

__all__ = [
    "VerificationReport",
    "build_g",
    "compare",
    "required_f_precision",
    "selberg_sides",
    "thm1_constant",
    "thm1_sides",
    "thm2_sides",
    "thm3_sides",
    "verify",
]


def thm1_constant(k: int, w: int, v: int) -> Fraction:
    """binom(2w+v, w) / binom(k+2w+v-1, k+w-1)."""
    return Fraction(comb(2 * w + v, w), comb(k + 2 * w + v - 1, k + w - 1))


def _integral_weight(f: FormExpansion) -> int:
    if f.half_integral:
        raise HypothesisViolated("f must have integral weight")
    return f.twice_weight // 2


def _need(f: FormExpansion, prec: int, what: str):
    if f.prec < prec:
        raise InsufficientPrecision(
            f"{what} needs f to precision {prec}, got {f.prec}", required=prec
        )


def _require(cond: bool, message: str):
    if not cond:
        raise HypothesisViolated(message)


def _check_eigen(f, chi, bound):
    try:
        res = fm.check_eigenform(f, bound, chi)
    except PrecisionExceeded as exc:
        raise InsufficientPrecision(str(exc), required=bound * bound + 1) from exc
    if not res:
        m, n = res.counterexample
        raise HypothesisViolated(
            f"f is not a normalized eigenform for the given character (fails at m={m}, n={n})"
        )


def required_f_precision(statement: str, prec: int, *, r: int = 1, t: int = 1,
                         eigen_bound: int = 10) -> int:
    """Precision of f needed to compare ``prec`` coefficients of a statement.

    For theorem 2 pass the discriminant as ``t``.
    """
    lift_in = required_input_precision(t, prec)
    return max(-(-lift_in // (4 * r)), prec, eigen_bound**2 + 1, t + 1)


def build_g(f: FormExpansion, r: int, psi: DirichletCharacter, order: int, prec: int) -> FormExpansion:
    """sum over unitary d | r of psi_d(-1) [f(rz/d), f(dz)]_order."""
    if psi.modulus != r:
        raise HypothesisViolated(f"psi has modulus {psi.modulus}, expected r = {r}")
    _need(f, prec, "build_g")
    total = None
    for d in divisors(r):
        if gcd(d, r // d) != 1:
            continue
        sign = component_psi_d(psi, d)(-1)
        term = bracket(fm.dilate(f, r // d), fm.dilate(f, d), order)
        term = term.with_series(term.series.scale(sign).truncate(prec))
        total = term if total is None else total.with_series(total.series + term.series)
    return total


def _theta_cusp_note(f: FormExpansion, psi: DirichletCharacter, w: int) -> tuple:
    if w == 0 and f.series.coeffs[0] and psi.parity == 0:
        return ("extended-definition",)
    return ()


def thm1_sides(f: FormExpansion, N: int, chi: DirichletCharacter, psi: DirichletCharacter,
               r: int, t: int, w: int, prec: int, eigen_bound: int = 10):
    """S_t([f(4rz), theta_psi(tz)]_w) against its closed form.

    rhs = binom(2w+v,w) binom(k+2w+v-1,k+w-1)^{-1} a(t) t^w
          * g_psi | (I - psi(2) chi(2) 2^{k+2w+v-1} B(2))
    """
    k = _integral_weight(f)
    _require(psi.modulus == r, f"psi has modulus {psi.modulus}, expected r = {r}")
    _require(is_squarefree(t), f"t = {t} is not squarefree")
    _require(N % t == 0, f"t = {t} does not divide N = {N}")
    _require(gcd(t, r) == 1, f"gcd(t, r) = gcd({t}, {r}) != 1")
    _require(N % chi.modulus == 0, f"chi modulus {chi.modulus} does not divide N = {N}")
    need = required_f_precision("thm1", prec, r=r, t=t, eigen_bound=eigen_bound)
    _need(f, need, "theorem 1")
    _check_eigen(f, chi, eigen_bound)

    v = psi.parity
    K = k + 2 * w + v
    lift_in = required_input_precision(t, prec)
    F = bracket(fm.dilate(f, 4 * r), fm.theta_series(psi, t, lift_in), w)
    Np = N // gcd(N, r)
    ambient = 4 * Np * r * r
    X = multiply(psi, chi, make_kronecker(fundamental_discriminant_of(t)),
                 power(make_kronecker(-4), k + v))
    F = F.with_character(induce(X, ambient), level=ambient)
    lhs = shimura_lift(F, t, prec)

    g = build_g(f, r, psi, 2 * w + v, prec)
    g_psi = fm.twist(g, psi)
    b = -psi(2) * chi(2) * 2 ** (K - 1)
    c = thm1_constant(k, w, v) * f.coefficient(t) * t**w
    rhs = fm.scale(fm.apply_aI_bB(g_psi, 1, b, 2), c)
    return lhs, rhs


def thm2_sides(f: FormExpansion, N: int, chi: DirichletCharacter, psi: DirichletCharacter,
               r: int, D: int, w: int, prec: int, eigen_bound: int = 10):
    """S_D^+([f(4rz), theta_psi(Dz)]_w) against binom(..) binom(..)^{-1} D^w g_psi.

    The lift is normalized by the eigenform's a(D).
    """
    k = _integral_weight(f)
    _require(D > 0 and is_fundamental_discriminant(D), f"D = {D} is not a positive fundamental discriminant")
    _require(N % D == 0, f"D = {D} does not divide N = {N}")
    _require(gcd(D, r) == 1, f"gcd(D, r) = gcd({D}, {r}) != 1")
    _require(N % 2 == 1, f"N = {N} must be odd for the plus space")
    _require(psi.modulus == r, f"psi has modulus {psi.modulus}, expected r = {r}")
    _require(N % chi.modulus == 0, f"chi modulus {chi.modulus} does not divide N = {N}")
    need = required_f_precision("thm2", prec, r=r, t=D, eigen_bound=eigen_bound)
    _need(f, need, "theorem 2")
    _check_eigen(f, chi, eigen_bound)

    v = psi.parity
    lift_in = required_input_precision(D, prec)
    F = bracket(fm.dilate(f, 4 * r), fm.theta_series(psi, D, lift_in), w)
    ambient = (N // gcd(N, r)) * r * r
    X = multiply(psi, chi, make_kronecker(D))
    F = F.with_character(induce(X, ambient), level=ambient)
    lhs = kohnen_lift(F, D, prec, normalizer=f.coefficient(D))

    g = build_g(f, r, psi, 2 * w + v, prec)
    rhs = fm.scale(fm.twist(g, psi), thm1_constant(k, w, v) * D**w)
    return lhs, rhs


def _thm3_primes(M: int, r: int, d: int) -> list:
    """Primes p | M with p not dividing r/d."""
    return [p for p, _ in factorize(M) if (r // d) % p]


def thm3_sides(f: FormExpansion, N: int, chi: DirichletCharacter, r: int, t: int, w: int,
               M: int, prec: int, eigen_bound: int = 10):
    """S_t([f(4rz), theta(tz)]_w) at level M against the all-divisor closed form

        C a(t) t^w sum_{d | r} [f(rz/d), f_{chi_{0,r/d}}(dz)]_{2w}
                   | prod_p (I - chi(p) p^{k+2w-1} B(p)),

    the product running over primes p | M that do not divide r/d.
    """
    k = _integral_weight(f)
    _require(M % (4 * N * r) == 0, f"4Nr = {4 * N * r} does not divide M = {M}")
    _require(is_squarefree(t), f"t = {t} is not squarefree")
    _require(N % t == 0, f"t = {t} does not divide N = {N}")
    _require(gcd(t, r) == 1, f"gcd(t, r) = gcd({t}, {r}) != 1")
    _require(N % chi.modulus == 0, f"chi modulus {chi.modulus} does not divide N = {N}")
    need = required_f_precision("thm3", prec, r=r, t=t, eigen_bound=eigen_bound)
    _need(f, need, "theorem 3")
    _check_eigen(f, chi, eigen_bound)

    lift_in = required_input_precision(t, prec)
    F = bracket(fm.dilate(f, 4 * r), fm.theta_series(make_trivial(1), t, lift_in), w)
    X = multiply(chi, make_kronecker(fundamental_discriminant_of(t)), power(make_kronecker(-4), k))
    F = F.with_character(induce(X, M), level=M)
    lhs = shimura_lift(F, t, prec)

    total = None
    for d in divisors(r):
        twisted = fm.twist(f, make_trivial(r // d))
        term = bracket(fm.dilate(f, r // d), fm.dilate(twisted, d), 2 * w)
        term = term.with_series(term.series.truncate(prec))
        for p in _thm3_primes(M, r, d):
            term = fm.apply_aI_bB(term, 1, -chi(p) * p ** (k + 2 * w - 1), p)
        total = term if total is None else total.with_series(total.series + term.series)
    c = thm1_constant(k, w, 0) * f.coefficient(t) * t**w
    return lhs, fm.scale(total, c)


def selberg_sides(f: FormExpansion, prec: int, eigen_bound: int = 10):
    """S_1(f(4z) theta(z)) against f^2 - 2^{k-1} f^2(2z) for a level-1 eigenform."""
    k = _integral_weight(f)
    need = required_f_precision("selberg", prec, eigen_bound=eigen_bound)
    _need(f, need, "Selberg's identity")
    _check_eigen(f, make_trivial(1), eigen_bound)
    lift_in = required_input_precision(1, prec)
    theta = fm.theta_series(make_trivial(1), 1, lift_in)
    F = bracket(fm.dilate(f, 4), theta, 0)
    F = F.with_character(induce(power(make_kronecker(-4), k), 4), level=4)
    lhs = shimura_lift(F, 1, prec)
    sq = bracket(f, f, 0)
    sq = sq.with_series(sq.series.truncate(prec))
    rhs = fm.apply_aI_bB(sq, 1, -(2 ** (k - 1)), 2)
    return lhs, rhs


# -- verification ----------------------------------------------------------


@dataclass
class VerificationReport:
    """Result of comparing two sides coefficient by coefficient.

    ``passed`` is true iff no mismatch was found and no error occurred;
    ``precision`` is the number of compared coefficients.
    """

    statement: str
    parameters: dict
    passed: bool
    precision: int = 0
    first_mismatch: tuple | None = None
    reason: str | None = None
    error: Exception | None = None
    notes: tuple = ()
    required_precision: dict = field(default_factory=dict)

    def format(self) -> str:
        lines = [f"statement: {self.statement}"]
        for key, val in self.parameters.items():
            lines.append(f"  {key} = {val}")
        for key, val in self.required_precision.items():
            lines.append(f"  required precision ({key}) = {val}")
        lines.append(f"compared coefficients: {self.precision}")
        for note in self.notes:
            lines.append(f"note: {note}")
        if self.first_mismatch is not None:
            n, a, b = self.first_mismatch
            lines.append(f"first mismatch at n={n}: lhs={a} rhs={b}")
        if self.reason:
            lines.append(f"reason: {self.reason}")
        lines.append("result: PASS" if self.passed else "result: FAIL")
        return "\n".join(lines)


def compare(lhs, rhs, prec: int):
    """First ``(n, lhs_n, rhs_n)`` with n in 1..prec-1 where the sides differ."""
    a = lhs.series if isinstance(lhs, FormExpansion) else lhs
    b = rhs.series if isinstance(rhs, FormExpansion) else rhs
    for n in range(1, prec):
        x, y = a[n], b[n]
        if x != y:
            return (n, x, y)
    return None


FormSource = Callable[[int], FormExpansion]


def _source(f) -> FormSource:
    if callable(f) and not isinstance(f, FormExpansion):
        return f
    if isinstance(f, FormExpansion):
        return lambda prec: f
    return lambda prec: fm.builtin_form(str(f), prec)


def _char(x) -> DirichletCharacter:
    return x if isinstance(x, DirichletCharacter) else parse_character(str(x))


def _describe(params: Mapping) -> dict:
    out = {}
    for key, val in params.items():
        if isinstance(val, DirichletCharacter):
            val = val.label
        elif callable(val):
            val = getattr(val, "__name__", "form")
        out[key] = str(val)
    return out


def _inject(f: FormExpansion, n: int) -> FormExpansion:
    c = list(f.series.coeffs)
    c[n] = c[n] + 1
    return f.with_series(TruncatedQSeries(c))


def _lemma_grid(params, kmax, wmax):
    for k in range(1, kmax + 1):
        for w in range(1, wmax + 1):
            for v in (0, 1):
                if not lemma1_check(k, w, v):
                    return (k, w, v)
    return None


def verify(statement: str, parameters: Mapping | None = None, prec: int = 20) -> VerificationReport:
    """Build both sides of ``statement`` and compare them on indices 1..prec-1.

    ``statement`` is one of thm1, thm2, thm3, lemma1, selberg.  The form
    ``f`` may be a FormExpansion, a callable ``prec -> FormExpansion`` or a
    built-in name such as ``"builtin:f4l5"``; characters may be given as
    literals.  For self-tests, ``fault_scale`` multiplies the rhs and
    ``fault_index`` (with ``fault_side`` "lhs" or "rhs") adds 1 to a
    single coefficient.
    """
    params = dict(parameters or {})
    report = VerificationReport(statement, _describe(params), passed=False)
    try:
        if statement == "lemma1":
            kmax, wmax = int(params.get("kmax", 8)), int(params.get("wmax", 6))
            bad = _lemma_grid(params, kmax, wmax)
            report.precision = kmax * wmax * 2
            if bad is not None:
                report.reason = "identity fails at (k, w, v) = %s" % (bad,)
                return report
            report.passed = True
            return report

        bound = int(params.get("eigen_bound", 10))
        src = _source(params["f"])
        w = int(params.get("w", 0))
        if statement == "thm1":
            r, t = int(params.get("r", 1)), int(params.get("t", 1))
            psi = _char(params.get("psi", "trivial:1"))
            r = psi.modulus if "r" not in params else r
            need = required_f_precision(statement, prec, r=r, t=t, eigen_bound=bound)
            f = src(need)
            chi = _char(params.get("chi", f.character.label))
            lhs, rhs = thm1_sides(f, int(params["N"]), chi, psi, r, t, w, prec, bound)
            report.notes = _theta_cusp_note(f, psi, w)
        elif statement == "thm2":
            D = int(params["D"])
            psi = _char(params.get("psi", "trivial:1"))
            r = int(params.get("r", psi.modulus))
            need = required_f_precision(statement, prec, r=r, t=D, eigen_bound=bound)
            f = src(need)
            chi = _char(params.get("chi", f.character.label))
            lhs, rhs = thm2_sides(f, int(params["N"]), chi, psi, r, D, w, prec, bound)
            report.notes = _theta_cusp_note(f, psi, w)
        elif statement == "thm3":
            r, t = int(params.get("r", 1)), int(params.get("t", 1))
            need = required_f_precision(statement, prec, r=r, t=t, eigen_bound=bound)
            f = src(need)
            chi = _char(params.get("chi", f.character.label))
            lhs, rhs = thm3_sides(f, int(params["N"]), chi, r, t, w, int(params["M"]), prec, bound)
            report.notes = _theta_cusp_note(f, make_trivial(1), w)
        elif statement == "selberg":
            need = required_f_precision(statement, prec, eigen_bound=bound)
            f = src(need)
            lhs, rhs = selberg_sides(f, prec, bound)
            report.notes = _theta_cusp_note(f, make_trivial(1), 0)
        else:
            raise ValueError(f"unknown statement {statement!r}")
        report.required_precision = {
            "f": need,
            "lift input": required_input_precision(
                int(params.get("D", params.get("t", 1))), prec
            ),
        }
        scale = Fraction(params.get("fault_scale", 1))
        if scale != 1:
            rhs = fm.scale(rhs, scale)
        if "fault_index" in params:
            n = int(params["fault_index"])
            if params.get("fault_side", "rhs") == "lhs":
                lhs = _inject(lhs, n)
            else:
                rhs = _inject(rhs, n)
        report.precision = prec - 1
        report.first_mismatch = compare(lhs, rhs, prec)
        report.passed = report.first_mismatch is None
    except (ShimliftError, KeyError, ValueError) as exc:
        report.error = exc
        report.reason = f"{type(exc).__name__}: {exc}"
        report.passed = False
    return report
