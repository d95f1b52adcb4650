"""Explicit multiple zeta value relations from the associator equations."""
from .coeff import MU, ONE, PI, ZERO, ZS, CoeffExpr
from .series import NCSeries, nc_exp, nc_mul, shuffle, substitute_letters
from .words import AB, AX, composition_to_word, format_word, parse_word, word_to_composition

__version__ = "0.1.0"

__all__ = [
    "CoeffExpr", "NCSeries", "ZS", "PI", "MU", "ZERO", "ONE", "AX", "AB",
    "nc_mul", "nc_exp", "shuffle", "substitute_letters",
    "format_word", "parse_word", "composition_to_word", "word_to_composition",
]
