"""
First-order language: syntax trees, substitution and the text syntax.
"""

from .syntax import (
    And, BLACK_SWAN_DEFINITIONS, BLACK_SWAN_SIGNATURE, Const, Definition, Exists,
    Forall, Formula, Implies, Meta, Not, Or, Pred, Signature, Term, Var,
    check_signature, expand_defs, free_vars, is_closed, is_substitutable, substitute,
)
from .parser import parse_formula, print_formula

__all__ = [
    'And', 'BLACK_SWAN_DEFINITIONS', 'BLACK_SWAN_SIGNATURE', 'Const', 'Definition',
    'Exists', 'Forall', 'Formula', 'Implies', 'Meta', 'Not', 'Or', 'Pred', 'Signature',
    'Term', 'Var', 'check_signature', 'expand_defs', 'free_vars', 'is_closed',
    'is_substitutable', 'substitute', 'parse_formula', 'print_formula',
]
