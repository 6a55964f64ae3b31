"""
Deterministic single-point mutations of proof scripts.

Used to exercise the checker: a sound kernel must reject every mutant, and the
first failing line can never precede the mutated one.
"""

import random
import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterator, List, Optional, Tuple

from .script import ProofLine, ProofScript
from ..errors import KernelError
from ..logic.parser import print_formula
from ..logic.syntax import (
    And, Binary, Formula, Implies, Not, Or, Pred, Quantifier, Var, expand_defs, subformulas,
)


logger = logging.getLogger(__name__)

Path = Tuple[int, ...]


class MutationKind(Enum):
    PREMISE = "premise"
    CONNECTIVE = "connective"
    RENAME = "rename"


@dataclass(frozen=True)
class Mutation:
    kind: MutationKind
    line: int
    description: str
    script: ProofScript


def _children(f: Formula) -> Tuple[Formula, ...]:
    if isinstance(f, Not):
        return (f.body,)
    if isinstance(f, Binary):
        return (f.left, f.right)
    if isinstance(f, Quantifier):
        return (f.body,)
    return ()


def _get(f: Formula, path: Path) -> Formula:
    for step in path:
        f = _children(f)[step]
    return f


def _put(f: Formula, path: Path, new: Formula) -> Formula:
    if not path:
        return new
    step, rest = path[0], path[1:]
    if isinstance(f, Not):
        return Not(_put(f.body, rest, new))
    if isinstance(f, Binary):
        if step == 0:
            return type(f)(_put(f.left, rest, new), f.right)
        return type(f)(f.left, _put(f.right, rest, new))
    return type(f)(f.var, _put(f.body, rest, new))


def _paths(f: Formula, path: Path = ()) -> Iterator[Path]:
    yield path
    for k, child in enumerate(_children(f)):
        yield from _paths(child, path + (k,))


def _bound_occurrences(f: Formula, path: Path = (), bound: frozenset = frozenset()) -> Iterator[Tuple[Path, int]]:
    """(predicate path, argument index) of every bound variable occurrence."""
    if isinstance(f, Pred):
        for k, arg in enumerate(f.args):
            if isinstance(arg, Var) and arg.name in bound:
                yield path, k
        return
    inner = bound | {f.var} if isinstance(f, Quantifier) else bound
    for k, child in enumerate(_children(f)):
        yield from _bound_occurrences(child, path + (k,), inner)


def _fresh_variable(f: Formula) -> str:
    used = {a.name for g in subformulas(f) if isinstance(g, Pred) for a in g.args}
    used |= {g.var for g in subformulas(f) if isinstance(g, Quantifier)}
    name, n = 'w', 0
    while name in used:
        n += 1
        name = f'w{n}'
    return name


class ScriptMutator:
    """Seeded generator of single mutations of one proof script."""

    def __init__(self, seed: int):
        self.seed = seed
        self.rng = random.Random(seed)

    def _with_line(self, script: ProofScript, line: ProofLine) -> ProofScript:
        lines = list(script.lines)
        lines[line.index - 1] = line
        return replace(script, lines=tuple(lines))

    def perturb_premise(self, script: ProofScript) -> Optional[Mutation]:
        ruled = [ln for ln in script.lines if ln.justification.premises]
        if not ruled:
            return None
        line = self.rng.choice(ruled)
        slot = self.rng.randrange(len(line.justification.premises))
        current = line.justification.premises[slot]
        current_formula = expand_defs(script.line(current).formula) if 1 <= current < line.index else None
        candidates = [
            c for c in range(1, len(script) + 1)
            if c != current and (c >= line.index or expand_defs(script.line(c).formula) != current_formula)
        ]
        if not candidates:
            return None
        new = self.rng.choice(candidates)
        premises = list(line.justification.premises)
        premises[slot] = new
        mutated = replace(line, justification=replace(line.justification, premises=tuple(premises)))
        return Mutation(MutationKind.PREMISE, line.index,
                        f"line {line.index}: premise {current} -> {new}",
                        self._with_line(script, mutated))

    def swap_connective(self, script: ProofScript) -> Optional[Mutation]:
        sites = [(ln, p) for ln in script.lines for p in _paths(ln.formula)
                 if isinstance(_get(ln.formula, p), Binary)]
        if not sites:
            return None
        line, path = self.rng.choice(sites)
        node = _get(line.formula, path)
        replacement = self.rng.choice([c for c in (And, Or, Implies) if c is not type(node)])
        formula = _put(line.formula, path, replacement(node.left, node.right))
        return Mutation(MutationKind.CONNECTIVE, line.index,
                        f"line {line.index}: {type(node).__name__} -> {replacement.__name__} "
                        f"in {print_formula(node)}",
                        self._with_line(script, replace(line, formula=formula)))

    def rename_bound(self, script: ProofScript) -> Optional[Mutation]:
        sites = [(ln, occ) for ln in script.lines for occ in _bound_occurrences(ln.formula)]
        if not sites:
            return None
        line, (path, k) = self.rng.choice(sites)
        pred = _get(line.formula, path)
        fresh = Var(_fresh_variable(line.formula))
        args = list(pred.args)
        old = args[k]
        args[k] = fresh
        formula = _put(line.formula, path, Pred(pred.name, tuple(args)))
        return Mutation(MutationKind.RENAME, line.index,
                        f"line {line.index}: bound {old} -> free {fresh} in {print_formula(pred)}",
                        self._with_line(script, replace(line, formula=formula)))

    def mutate(self, script: ProofScript) -> Mutation:
        """One random mutation; kinds with no applicable site are skipped."""
        operators = [self.perturb_premise, self.swap_connective, self.rename_bound]
        self.rng.shuffle(operators)
        for operator in operators:
            mutation = operator(script)
            if mutation is not None:
                return mutation
        raise KernelError(f"Script {script.name or '<script>'} offers no mutation site")

    def generate(self, script: ProofScript, count: int) -> List[Mutation]:
        mutations = [self.mutate(script) for _ in range(count)]
        logger.debug(f"Generated {count} mutations of {script.name or '<script>'} (seed {self.seed})")
        return mutations


def generate_mutations(script: ProofScript, count: int, seed: int) -> List[Mutation]:
    return ScriptMutator(seed).generate(script, count)
