"""
Axiom schemas FO1-FO12 and schema-instance matching.

FO1-FO10 are propositional patterns over the metavariables A, B, C and are
matched by one-way unification. FO11 and FO12 carry a term parameter and are
matched by anti-substitution: the quantified side fixes the template A and
the variable x, and the term t is recovered from the other side.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ..logic.parser import parse_formula, print_formula
from ..logic.syntax import (
    Binary, Exists, Forall, Formula, Implies, Meta, Not, Pred, Quantifier, Term, Var,
    is_substitutable, substitute,
)


logger = logging.getLogger(__name__)

SCHEMA_IDS: Tuple[str, ...] = tuple(f"FO{i}" for i in range(1, 13))

PROPOSITIONAL_SCHEMAS: Dict[str, Formula] = {
    name: parse_formula(text, metavariables=True)
    for name, text in {
        'FO1': "A -> (B -> A)",
        'FO2': "(A -> B) -> ((A -> (B -> C)) -> (A -> C))",
        'FO3': "A -> (A \\/ B)",
        'FO4': "B -> (A \\/ B)",
        'FO5': "(A -> C) -> ((B -> C) -> ((A \\/ B) -> C))",
        'FO6': "(A -> B) -> ((A -> ~B) -> ~A)",
        'FO7': "~~A -> A",
        'FO8': "(A /\\ B) -> A",
        'FO9': "(A /\\ B) -> B",
        'FO10': "A -> (B -> (A /\\ B))",
    }.items()
}

QUANTIFIER_SCHEMAS = {
    'FO11': "A[x:=t] -> exists x (A)",
    'FO12': "forall x (A) -> A[x:=t]",
}


@dataclass(frozen=True)
class Instantiation:
    """Witness assignment under which a formula is an instance of a schema."""
    schema: str
    metas: Tuple[Tuple[str, Formula], ...] = ()
    var: Optional[str] = None
    term: Optional[Term] = None

    def as_text(self) -> Dict[str, str]:
        """Printable view: metavariable (and x, t) to text."""
        result = {name: print_formula(value) for name, value in self.metas}
        if self.var is not None:
            result['x'] = self.var
        if self.term is not None:
            result['t'] = str(self.term)
        return result


def schema_text(schema_id: str) -> str:
    if schema_id in PROPOSITIONAL_SCHEMAS:
        return print_formula(PROPOSITIONAL_SCHEMAS[schema_id])
    return QUANTIFIER_SCHEMAS[schema_id]


def _unify(pattern: Formula, f: Formula, bindings: Dict[str, Formula]) -> bool:
    if isinstance(pattern, Meta):
        bound = bindings.get(pattern.name)
        if bound is None:
            bindings[pattern.name] = f
            return True
        return bound == f
    if type(pattern) is not type(f):
        return False
    if isinstance(pattern, Not):
        return _unify(pattern.body, f.body, bindings)
    if isinstance(pattern, Binary):
        return _unify(pattern.left, f.left, bindings) and _unify(pattern.right, f.right, bindings)
    return pattern == f


def recover_term(template: Formula, x: str, instance: Formula) -> Optional[Term]:
    """Find t with template[x:=t] == instance and t substitutable, or None."""
    found: Dict[str, Term] = {}
    if not _collect(template, x, instance, found):
        return None
    t = found.get('t', Var(x))
    if not is_substitutable(template, x, t):
        return None
    if substitute(template, x, t) != instance:
        return None
    return t


def _collect(a: Formula, x: str, inst: Formula, found: Dict[str, Term]) -> bool:
    # Records the term standing at each free occurrence of x; all must agree.
    if type(a) is not type(inst):
        return False
    if isinstance(a, Pred):
        if a.name != inst.name or len(a.args) != len(inst.args):
            return False
        for arg, other in zip(a.args, inst.args):
            if isinstance(arg, Var) and arg.name == x:
                if found.setdefault('t', other) != other:
                    return False
            elif arg != other:
                return False
        return True
    if isinstance(a, Not):
        return _collect(a.body, x, inst.body, found)
    if isinstance(a, Binary):
        return _collect(a.left, x, inst.left, found) and _collect(a.right, x, inst.right, found)
    if isinstance(a, Quantifier):
        if a.var != inst.var:
            return False
        if a.var == x:
            return a == inst
        return _collect(a.body, x, inst.body, found)
    return a == inst


def match_schema(f: Formula, schema_id: str) -> Optional[Instantiation]:
    """Return an instantiation making f an instance of the schema, or None."""
    if schema_id in PROPOSITIONAL_SCHEMAS:
        bindings: Dict[str, Formula] = {}
        if not _unify(PROPOSITIONAL_SCHEMAS[schema_id], f, bindings):
            return None
        return Instantiation(schema_id, tuple(sorted(bindings.items())))

    if schema_id not in QUANTIFIER_SCHEMAS:
        raise ValueError(f"Unknown schema: {schema_id}")
    if not isinstance(f, Implies):
        return None

    if schema_id == 'FO11':
        quantified, instance, cls = f.right, f.left, Exists
    else:
        quantified, instance, cls = f.left, f.right, Forall
    if not isinstance(quantified, cls):
        return None
    t = recover_term(quantified.body, quantified.var, instance)
    if t is None:
        return None
    return Instantiation(schema_id, (('A', quantified.body),), quantified.var, t)


def matching_schemas(f: Formula) -> Tuple[str, ...]:
    """All schema ids f is an instance of."""
    return tuple(s for s in SCHEMA_IDS if match_schema(f, s) is not None)
