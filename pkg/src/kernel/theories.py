"""
Theories: named sets of closed axioms and goals, and the built-in registry.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping

from ..errors import KernelError, TheoryError, UnknownTheory
from ..logic.parser import parse_formula, print_formula
from ..logic.syntax import Formula, expand_defs, free_vars


logger = logging.getLogger(__name__)

AX1 = parse_formula("exists x (occ(x) /\\ forall y (lt(x,y) -> ~img(y)))")
AX2 = parse_formula("forall x (occ(x) -> exists y (occ(y) /\\ lt(x,y)))")
MURPHY = parse_formula("forall x (forall y ((occ(x) /\\ lt(x,y)) -> occ(y)))")
OPEN_UNIVERSE = parse_formula("forall x (exists y (lt(x,y)))")
THM = parse_formula("exists z (occ(z) /\\ ~img(z))")
IRREFLEXIVITY = parse_formula("forall a (~lt(a,a))")
TRANSITIVITY = parse_formula("forall a (forall b (forall c ((lt(a,b) /\\ lt(b,c)) -> lt(a,c))))")


@dataclass(frozen=True)
class Theory:
    """Named collection of closed axioms and goals."""
    name: str
    axioms: Mapping[str, Formula] = field(default_factory=dict)
    goals: Mapping[str, Formula] = field(default_factory=dict)
    description: str = ""

    def __post_init__(self):
        object.__setattr__(self, 'axioms', dict(self.axioms))
        object.__setattr__(self, 'goals', dict(self.goals))
        for kind, table in (('axiom', self.axioms), ('goal', self.goals)):
            for key, formula in table.items():
                open_vars = free_vars(expand_defs(formula))
                if open_vars:
                    raise TheoryError(
                        f"{kind} {key} of theory {self.name} is not closed "
                        f"(free: {', '.join(sorted(open_vars))})")
        overlap = set(self.axioms) & set(self.goals)
        if overlap:
            raise TheoryError(f"Names used for both axioms and goals: {sorted(overlap)}")

    def __hash__(self):
        return hash(self.name)

    def formula(self, key: str) -> Formula:
        """Look up an axiom or goal by name."""
        if key in self.axioms:
            return self.axioms[key]
        if key in self.goals:
            return self.goals[key]
        raise KernelError(f"Theory {self.name} has no axiom or goal named {key!r}")

    def names(self) -> List[str]:
        return list(self.axioms) + list(self.goals)

    def describe(self) -> Dict[str, str]:
        return {key: print_formula(self.formula(key)) for key in self.names()}


_REGISTRY: Dict[str, Theory] = {}


def register_theory(theory: Theory, replace: bool = False) -> Theory:
    if theory.name in _REGISTRY and not replace:
        raise TheoryError(f"Theory {theory.name} already registered")
    _REGISTRY[theory.name] = theory
    logger.debug(f"Registered theory {theory.name} ({len(theory.axioms)} axioms)")
    return theory


def get_theory(name: str) -> Theory:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownTheory(f"Unknown theory: {name}") from None


def list_theories() -> List[str]:
    return sorted(_REGISTRY)


BLACKSWAN = register_theory(Theory(
    'blackswan',
    axioms={'Ax1': AX1, 'Ax2': AX2, 'Murphy': MURPHY, 'OpenUniverse': OPEN_UNIVERSE},
    goals={'Thm': THM},
    description="Bounded imagination and ever-greater occurring events",
))

register_theory(Theory(
    'murphy',
    axioms={'Murphy': MURPHY, 'OpenUniverse': OPEN_UNIVERSE},
    goals={'Ax2': AX2},
    description="Murphy's law over an open universe",
))

register_theory(Theory(
    'ordered-blackswan',
    axioms={**BLACKSWAN.axioms, 'Irreflexivity': IRREFLEXIVITY, 'Transitivity': TRANSITIVITY},
    goals={'Thm': THM},
    description="blackswan with lt constrained to a strict partial order",
))

register_theory(Theory('pure', description="No axioms; schema instances and rules only"))
