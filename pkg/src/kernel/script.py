"""
Proof scripts: data types, the line-oriented text format and its canonical printer.

    theory <name>
    goal <goal-name | formula>
    <n>. <formula> ; <justification>  # optional note

Justifications are FO1..FO12, ``AX <axiom>``, ``MP <i> <j>``, ``R1 <i>``,
``R2 <i>`` and ``R3 <i>``. Premise numbers are parsed as written; whether
they point backwards is a check, not a parse, concern.
"""

import re
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from .rules import Rule
from .schemas import SCHEMA_IDS
from ..errors import ParseError
from ..logic.parser import parse_formula, print_formula
from ..logic.syntax import BLACK_SWAN_SIGNATURE, Formula, Signature


logger = logging.getLogger(__name__)

LINE_RE = re.compile(r'\s*(\d+)\.(.*)\Z')
NAME_RE = re.compile(r'[A-Za-z][A-Za-z0-9_\-]*\Z')
JUSTIFICATION_KEYWORDS = frozenset(SCHEMA_IDS) | {'AX', 'MP', 'R1', 'R2', 'R3'}


class JustificationKind(Enum):
    SCHEMA = "schema"
    AXIOM = "axiom"
    MP = "MP"
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"


@dataclass(frozen=True)
class Justification:
    """Why a proof line holds: a schema, a theory axiom, or a rule over earlier lines."""
    kind: JustificationKind
    name: Optional[str] = None
    premises: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'premises', tuple(self.premises))

    @property
    def rule(self) -> Optional[Rule]:
        if self.kind in (JustificationKind.SCHEMA, JustificationKind.AXIOM):
            return None
        return Rule(self.kind.value)

    def __str__(self):
        if self.kind is JustificationKind.SCHEMA:
            return self.name
        if self.kind is JustificationKind.AXIOM:
            return f"AX {self.name}"
        return " ".join([self.kind.value] + [str(p) for p in self.premises])

    @classmethod
    def schema(cls, schema_id: str) -> 'Justification':
        return cls(JustificationKind.SCHEMA, schema_id)

    @classmethod
    def axiom(cls, name: str) -> 'Justification':
        return cls(JustificationKind.AXIOM, name)

    @classmethod
    def rule_application(cls, rule: Rule, *premises: int) -> 'Justification':
        return cls(JustificationKind(rule.value), None, premises)


@dataclass(frozen=True)
class ProofLine:
    index: int
    formula: Formula
    justification: Justification
    note: Optional[str] = None


@dataclass(frozen=True)
class ProofScript:
    """A numbered list of justified formulas claimed to prove a goal of a theory."""
    theory: str
    goal: str
    lines: Tuple[ProofLine, ...]
    goal_formula: Optional[Formula] = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, 'lines', tuple(self.lines))

    def __len__(self):
        return len(self.lines)

    def line(self, index: int) -> ProofLine:
        return self.lines[index - 1]

    def prefix(self, length: int) -> 'ProofScript':
        """The first length lines, with the goal unchanged."""
        return ProofScript(self.theory, self.goal, self.lines[:length], self.goal_formula, self.name)


def parse_justification(text: str, line: int, column: int) -> Justification:
    words = text.split()
    if not words:
        raise ParseError("missing justification", line, column, sorted(JUSTIFICATION_KEYWORDS))
    head, args = words[0], words[1:]
    if head in SCHEMA_IDS:
        if args:
            raise ParseError(f"{head} takes no arguments", line, column)
        return Justification.schema(head)
    if head == 'AX':
        if len(args) != 1:
            raise ParseError("AX takes exactly one axiom name", line, column)
        return Justification.axiom(args[0])
    if head in ('MP', 'R1', 'R2', 'R3'):
        rule = Rule(head)
        if len(args) != rule.arity:
            raise ParseError(f"{head} takes {rule.arity} line number(s)", line, column)
        if not all(a.isdigit() for a in args):
            raise ParseError(f"{head} expects line numbers", line, column, ['line number'])
        return Justification.rule_application(rule, *(int(a) for a in args))
    raise ParseError(f"unknown justification {head!r}", line, column, sorted(JUSTIFICATION_KEYWORDS))


def parse_script(text: str, name: str = "", signature: Signature = BLACK_SWAN_SIGNATURE) -> ProofScript:
    """Parse proof-script text; raises ParseError with the offending position."""
    theory: Optional[str] = None
    goal: Optional[str] = None
    goal_formula: Optional[Formula] = None
    lines: List[ProofLine] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        note = None
        body = raw
        if '#' in raw:
            cut = raw.index('#')
            body, note = raw[:cut], raw[cut + 1:].strip() or None
        stripped = body.strip()
        if not stripped:
            continue
        indent = len(body) - len(body.lstrip()) + 1

        keyword, _, rest = stripped.partition(' ')
        if keyword == 'theory':
            if lines or theory is not None:
                raise ParseError("theory must be declared once, before the first line", lineno, indent)
            if not NAME_RE.match(rest.strip()):
                raise ParseError("expected a theory name", lineno, indent + len(keyword) + 1, ['name'])
            theory = rest.strip()
            continue
        if keyword == 'goal':
            if lines or goal is not None:
                raise ParseError("goal must be declared once, before the first line", lineno, indent)
            goal = rest.strip()
            if not goal:
                raise ParseError("expected a goal name or formula", lineno, indent + len(keyword), ['name', 'formula'])
            if not NAME_RE.match(goal) or goal[0].islower():
                offset = body.index(goal) + 1
                goal_formula = parse_formula(goal, signature, line=lineno, column=offset)
            continue

        match = LINE_RE.match(body)
        if not match:
            raise ParseError("expected 'theory', 'goal' or a numbered proof line", lineno, indent,
                             ['theory', 'goal', 'line number'])
        index = int(match.group(1))
        if index != len(lines) + 1:
            raise ParseError(f"expected line number {len(lines) + 1}, found {index}", lineno, indent)
        content_start = match.start(2)
        content = match.group(2)
        if ';' not in content:
            raise ParseError("expected ';' before the justification", lineno, len(body) + 1, ["';'"])
        split = content.index(';')
        formula = parse_formula(content[:split], signature, line=lineno, column=content_start + 1)
        justification = parse_justification(content[split + 1:], lineno, content_start + split + 2)
        lines.append(ProofLine(index, formula, justification, note))

    if theory is None and goal is None and not lines:
        raise ParseError("empty proof script", 1, 1, ['theory'])
    if theory is None:
        raise ParseError("missing 'theory' declaration", 1, 1, ['theory'])
    if goal is None:
        raise ParseError("missing 'goal' declaration", 1, 1, ['goal'])
    if not lines:
        raise ParseError("proof script has no lines", len(text.splitlines()) + 1, 1, ['line number'])

    logger.debug(f"Parsed proof script {name or '<text>'}: {len(lines)} lines, theory {theory}")
    return ProofScript(theory, goal, tuple(lines), goal_formula, name)


def format_script(script: ProofScript) -> str:
    """Canonical text form; parse_script(format_script(s)) formats back identically."""
    goal = print_formula(script.goal_formula) if script.goal_formula is not None else script.goal
    out = [f"theory {script.theory}", f"goal {goal}"]
    for line in script.lines:
        text = f"{line.index}. {print_formula(line.formula)} ; {line.justification}"
        if line.note:
            text += f"  # {line.note}"
        out.append(text)
    return "\n".join(out) + "\n"
