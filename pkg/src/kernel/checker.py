"""
Line-by-line proof checking.

Each line is judged on its own formula, its justification and the formulas
of the lines it cites; a bad earlier line does not poison later ones. The
verdict is accepted only when every line is ok and the last formula equals
the claimed goal.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .rules import check_rule
from .schemas import match_schema
from .script import JustificationKind, ProofScript
from .theories import Theory, get_theory
from ..errors import KernelError
from ..logic.parser import print_formula
from ..logic.syntax import Formula, expand_defs


logger = logging.getLogger(__name__)


class Verdict(Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"


@dataclass(frozen=True)
class LineResult:
    """Outcome of checking one proof line."""
    index: int
    ok: bool
    justification: str
    formula: str
    reason: Optional[str] = None
    instantiation: Optional[Dict[str, str]] = None

    def to_dict(self) -> Dict:
        return {
            'index': self.index,
            'ok': self.ok,
            'justification': self.justification,
            'formula': self.formula,
            'reason': self.reason,
            'instantiation': dict(self.instantiation) if self.instantiation is not None else None,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'LineResult':
        return cls(
            index=data['index'],
            ok=data['ok'],
            justification=data['justification'],
            formula=data['formula'],
            reason=data.get('reason'),
            instantiation=data.get('instantiation'),
        )


@dataclass(frozen=True)
class CheckReport:
    """Verdict plus per-line results for one proof script."""
    script: str
    theory: str
    goal: str
    verdict: Verdict
    lines: Tuple[LineResult, ...] = field(default_factory=tuple)
    goal_ok: bool = False
    goal_reason: Optional[str] = None

    @property
    def accepted(self) -> bool:
        return self.verdict is Verdict.ACCEPTED

    @property
    def lines_ok(self) -> int:
        return sum(1 for r in self.lines if r.ok)

    @property
    def first_failure(self) -> Optional[int]:
        """Index of the first failing line, or None if every line is ok."""
        for result in self.lines:
            if not result.ok:
                return result.index
        return None

    def to_dict(self) -> Dict:
        return {
            'script': self.script,
            'theory': self.theory,
            'goal': self.goal,
            'verdict': self.verdict.value,
            'lines_ok': self.lines_ok,
            'lines_total': len(self.lines),
            'first_failure': self.first_failure,
            'goal_ok': self.goal_ok,
            'goal_reason': self.goal_reason,
            'lines': [r.to_dict() for r in self.lines],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'CheckReport':
        return cls(
            script=data['script'],
            theory=data['theory'],
            goal=data['goal'],
            verdict=Verdict(data['verdict']),
            lines=tuple(LineResult.from_dict(r) for r in data['lines']),
            goal_ok=data['goal_ok'],
            goal_reason=data.get('goal_reason'),
        )


def _resolve_goal(script: ProofScript, theory: Theory) -> Formula:
    if script.goal_formula is not None:
        return script.goal_formula
    if script.goal in theory.goals:
        return theory.goals[script.goal]
    raise KernelError(f"Theory {theory.name} has no goal named {script.goal!r}")


def check_line(script: ProofScript, index: int, theory: Theory) -> LineResult:
    """Check line `index` using only lines 1..index of the script."""
    line = script.line(index)
    just = line.justification
    formula = expand_defs(line.formula)

    def result(ok: bool, reason: Optional[str] = None, inst: Optional[Dict[str, str]] = None) -> LineResult:
        return LineResult(index, ok, str(just), print_formula(line.formula), reason, inst)

    if just.kind is JustificationKind.SCHEMA:
        instantiation = match_schema(formula, just.name)
        if instantiation is None:
            return result(False, f"not an instance of {just.name}")
        return result(True, inst=instantiation.as_text())

    if just.kind is JustificationKind.AXIOM:
        if just.name not in theory.axioms:
            return result(False, f"theory {theory.name} has no axiom {just.name}")
        if expand_defs(theory.axioms[just.name]) != formula:
            return result(False, f"formula differs from axiom {just.name}")
        return result(True)

    premises: List[Formula] = []
    for p in just.premises:
        if p >= index:
            return result(False, f"premise {p} is not an earlier line (forward reference)")
        if p < 1:
            return result(False, f"premise {p} does not exist")
        premises.append(expand_defs(script.line(p).formula))
    check = check_rule(premises, formula, just.rule)
    if not check.ok:
        return result(False, f"{just.rule.value}: {check.diagnostic}")
    return result(True)


def check_proof(script: ProofScript, theory: Optional[Theory] = None) -> CheckReport:
    """Check every line of the script against the theory and the claimed goal."""
    theory = theory or get_theory(script.theory)
    goal = expand_defs(_resolve_goal(script, theory))

    results = []
    for index in range(1, len(script) + 1):
        line_result = check_line(script, index, theory)
        if not line_result.ok:
            logger.debug(f"{script.name or 'script'} line {index}: {line_result.reason}")
        results.append(line_result)

    goal_ok, goal_reason = False, "script has no lines"
    if script.lines:
        goal_ok = expand_defs(script.lines[-1].formula) == goal
        goal_reason = None if goal_ok else f"last line does not state the goal {print_formula(goal)}"

    verdict = Verdict.ACCEPTED if goal_ok and all(r.ok for r in results) else Verdict.REJECTED
    report = CheckReport(
        script=script.name,
        theory=theory.name,
        goal=script.goal,
        verdict=verdict,
        lines=tuple(results),
        goal_ok=goal_ok,
        goal_reason=goal_reason,
    )
    logger.info(f"Proof {script.name or '<script>'}: {verdict.value}, "
                f"{report.lines_ok}/{len(results)} lines verified")
    return report
