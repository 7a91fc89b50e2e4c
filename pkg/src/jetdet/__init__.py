"""Jet ideals of determinantal varieties: Groebner bases, shellings and Hilbert series."""

from .algebra import Monomial, MonomialOrder, Polynomial, VariableTable, compare_monomials, determinant, jet_table
from .errors import CapExceeded, UsageError
from .groebner import (
    MonomialIdeal,
    buchberger_completion,
    is_groebner_basis,
    leading_ideal,
    normal_form,
    s_polynomial,
)
from .hilbert import HilbertSeries, check_conjecture, closed_form_conca_herzog, closed_form_jets
from .jets import JetIdealSpec, gamma_basis, jet_generators, verify_prop31

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "HilbertSeries",
    "JetIdealSpec",
    "Monomial",
    "MonomialIdeal",
    "MonomialOrder",
    "Polynomial",
    "UsageError",
    "VariableTable",
    "buchberger_completion",
    "check_conjecture",
    "closed_form_conca_herzog",
    "closed_form_jets",
    "compare_monomials",
    "determinant",
    "gamma_basis",
    "is_groebner_basis",
    "jet_generators",
    "jet_table",
    "leading_ideal",
    "normal_form",
    "s_polynomial",
    "verify_prop31",
]
