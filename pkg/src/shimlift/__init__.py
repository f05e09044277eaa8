"""Exact q-expansions of modular forms, Rankin-Cohen brackets and Shimura lifts."""

from .characters import DirichletCharacter, make_kronecker, make_trivial, parse_character
from .errors import ShimliftError
from .exact_ring import CyclotomicElement
from .forms import (
    FormExpansion,
    builtin_form,
    check_eigenform,
    check_plus_space,
    eisenstein,
    eta_quotient,
    theta_series,
)
from .qexp_file import parse_qexp, write_qexp
from .qseries import TruncatedQSeries
from .rankin_cohen import bracket, lemma1_check
from .shimura import kohnen_lift, shimura_lift
from .theorems import VerificationReport, build_g, verify

__version__ = "0.1.0"

__all__ = [
    "CyclotomicElement",
    "DirichletCharacter",
    "FormExpansion",
    "ShimliftError",
    "TruncatedQSeries",
    "VerificationReport",
    "bracket",
    "build_g",
    "builtin_form",
    "check_eigenform",
    "check_plus_space",
    "eisenstein",
    "eta_quotient",
    "kohnen_lift",
    "lemma1_check",
    "make_kronecker",
    "make_trivial",
    "parse_character",
    "parse_qexp",
    "shimura_lift",
    "theta_series",
    "verify",
    "write_qexp",
]
