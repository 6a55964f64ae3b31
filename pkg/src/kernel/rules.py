"""
Inference rules MP, R1, R2 and R3.

Each check returns a RuleCheck; a failed check carries a diagnostic and is
never raised.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from ..logic.parser import print_formula
from ..logic.syntax import And, Exists, Forall, Formula, Implies, free_vars


logger = logging.getLogger(__name__)


class Rule(Enum):
    """Inference rules of the calculus."""
    MP = "MP"
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"

    @property
    def arity(self) -> int:
        return 2 if self is Rule.MP else 1


@dataclass(frozen=True)
class RuleCheck:
    ok: bool
    diagnostic: str = ""

    def __bool__(self):
        return self.ok


def _fail(message: str) -> RuleCheck:
    return RuleCheck(False, message)


def check_mp(minor: Formula, major: Formula, conclusion: Formula) -> RuleCheck:
    if not isinstance(major, Implies):
        return _fail("second premise is not an implication")
    if major.left != minor:
        return _fail("antecedent of the second premise differs from the first premise")
    if major.right != conclusion:
        return _fail("consequent of the second premise differs from the conclusion")
    return RuleCheck(True)


def check_r1(premise: Formula, conclusion: Formula) -> RuleCheck:
    """C -> A  gives  C -> forall x (A), x not free in C."""
    if not isinstance(premise, Implies):
        return _fail("premise is not an implication")
    if not (isinstance(conclusion, Implies) and isinstance(conclusion.right, Forall)):
        return _fail("conclusion is not of the form C -> forall x (A)")
    if conclusion.left != premise.left:
        return _fail("antecedent C changed between premise and conclusion")
    if conclusion.right.body != premise.right:
        return _fail("body of the universal differs from the premise consequent")
    x = conclusion.right.var
    if x in free_vars(premise.left):
        return _fail(f"variable {x} occurs free in {print_formula(premise.left)}")
    return RuleCheck(True)


def check_r2(premise: Formula, conclusion: Formula) -> RuleCheck:
    """A -> C  gives  exists x (A) -> C, x not free in C."""
    if not isinstance(premise, Implies):
        return _fail("premise is not an implication")
    if not (isinstance(conclusion, Implies) and isinstance(conclusion.left, Exists)):
        return _fail("conclusion is not of the form exists x (A) -> C")
    if conclusion.right != premise.right:
        return _fail("consequent C changed between premise and conclusion")
    if conclusion.left.body != premise.left:
        return _fail("body of the existential differs from the premise antecedent")
    x = conclusion.left.var
    if x in free_vars(premise.right):
        return _fail(f"variable {x} occurs free in {print_formula(premise.right)}")
    return RuleCheck(True)


def check_r3(premise: Formula, conclusion: Formula) -> RuleCheck:
    """(A /\\ B) -> C  gives  B -> (A -> C)."""
    if not (isinstance(premise, Implies) and isinstance(premise.left, And)):
        return _fail("premise is not of the form (A /\\ B) -> C")
    a, b, c = premise.left.left, premise.left.right, premise.right
    if conclusion != Implies(b, Implies(a, c)):
        return _fail("conclusion is not B -> (A -> C) for the premise's A, B, C")
    return RuleCheck(True)


def check_rule(premises: Sequence[Formula], conclusion: Formula, rule: Rule) -> RuleCheck:
    """Check one rule application; premises are in justification order."""
    if len(premises) != rule.arity:
        return _fail(f"{rule.value} takes {rule.arity} premise(s), got {len(premises)}")
    if rule is Rule.MP:
        return check_mp(premises[0], premises[1], conclusion)
    if rule is Rule.R1:
        return check_r1(premises[0], conclusion)
    if rule is Rule.R2:
        return check_r2(premises[0], conclusion)
    return check_r3(premises[0], conclusion)
