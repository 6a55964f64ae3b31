"""
Abstract syntax of the first-order language: signatures, terms, formulas,
free variables, capture-avoiding substitution and definitional expansion.

All values are immutable; equality is syntactic (no alpha-conversion).
"""

import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, Mapping, Tuple, Union

from ..errors import CaptureError, SignatureError


IDENTIFIER = re.compile(r'[a-z][A-Za-z0-9_]*\Z')


@dataclass(frozen=True)
class Signature:
    """Predicate symbols with arities, declared constants, and abbreviation symbols."""
    predicates: Mapping[str, int]
    constants: FrozenSet[str] = frozenset()
    abbreviations: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'predicates', dict(self.predicates))
        object.__setattr__(self, 'constants', frozenset(self.constants))
        object.__setattr__(self, 'abbreviations', dict(self.abbreviations))
        for name in list(self.predicates) + list(self.constants):
            if not IDENTIFIER.match(name):
                raise SignatureError(f"Symbol {name!r} is not a lowercase identifier")
        clash = set(self.predicates) & set(self.constants)
        if clash:
            raise SignatureError(f"Symbols declared both as predicate and constant: {sorted(clash)}")
        for name, arity in list(self.predicates.items()) + list(self.abbreviations.items()):
            if arity < 1:
                raise SignatureError(f"Symbol {name!r} must have positive arity")

    def __hash__(self):
        return hash((tuple(sorted(self.predicates.items())), self.constants,
                     tuple(sorted(self.abbreviations.items()))))

    def arity(self, name: str) -> int:
        """Arity of a predicate or abbreviation symbol; raises SignatureError if undeclared."""
        if name in self.predicates:
            return self.predicates[name]
        if name in self.abbreviations:
            return self.abbreviations[name]
        raise SignatureError(f"Undeclared predicate {name!r}")

    def symbols(self) -> FrozenSet[str]:
        return frozenset(self.predicates) | frozenset(self.abbreviations)


# ---------------------------------------------------------------------------
# Terms

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


Term = Union[Var, Const]


def term_vars(t: Term) -> FrozenSet[str]:
    return frozenset([t.name]) if isinstance(t, Var) else frozenset()


# ---------------------------------------------------------------------------
# Formulas

@dataclass(frozen=True)
class Pred:
    name: str
    args: Tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, 'args', tuple(self.args))


@dataclass(frozen=True)
class Not:
    body: 'Formula'


@dataclass(frozen=True)
class And:
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class Or:
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class Implies:
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class Forall:
    var: str
    body: 'Formula'


@dataclass(frozen=True)
class Exists:
    var: str
    body: 'Formula'


@dataclass(frozen=True)
class Meta:
    """Schema metavariable (A, B, C); only appears in axiom-schema patterns."""
    name: str


Formula = Union[Pred, Not, And, Or, Implies, Forall, Exists, Meta]
Binary = (And, Or, Implies)
Quantifier = (Forall, Exists)


def subformulas(f: Formula) -> Iterator[Formula]:
    """Pre-order walk over f and all of its subformulas."""
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.body)
    elif isinstance(f, Binary):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, Quantifier):
        yield from subformulas(f.body)


def free_vars(f: Formula) -> FrozenSet[str]:
    """Variables with at least one free occurrence in f."""
    if isinstance(f, Pred):
        result: FrozenSet[str] = frozenset()
        for t in f.args:
            result |= term_vars(t)
        return result
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, Binary):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, Quantifier):
        return free_vars(f.body) - {f.var}
    return frozenset()


def is_closed(f: Formula) -> bool:
    return not free_vars(f)


def is_substitutable(f: Formula, x: str, t: Term) -> bool:
    """True iff no free occurrence of x in f lies under a binder of a variable of t."""
    return _free_for(f, x, term_vars(t), frozenset())


def _free_for(f: Formula, x: str, t_vars: FrozenSet[str], binders: FrozenSet[str]) -> bool:
    if isinstance(f, Pred):
        if any(isinstance(a, Var) and a.name == x for a in f.args):
            return not (binders & t_vars)
        return True
    if isinstance(f, Not):
        return _free_for(f.body, x, t_vars, binders)
    if isinstance(f, Binary):
        return (_free_for(f.left, x, t_vars, binders)
                and _free_for(f.right, x, t_vars, binders))
    if isinstance(f, Quantifier):
        if f.var == x:
            return True
        return _free_for(f.body, x, t_vars, binders | {f.var})
    return True


def substitute(f: Formula, x: str, t: Term) -> Formula:
    """Replace every free occurrence of x in f by t; CaptureError if t would be captured."""
    if not is_substitutable(f, x, t):
        raise CaptureError(f"{t} is not free for {x}")
    return _replace_free(f, {x: t})


def _replace_free(f: Formula, mapping: Mapping[str, Term]) -> Formula:
    # Simultaneous replacement of free variables; callers guarantee no capture.
    if not mapping:
        return f
    if isinstance(f, Pred):
        args = tuple(mapping.get(a.name, a) if isinstance(a, Var) else a for a in f.args)
        return f if args == f.args else Pred(f.name, args)
    if isinstance(f, Not):
        return Not(_replace_free(f.body, mapping))
    if isinstance(f, Binary):
        return type(f)(_replace_free(f.left, mapping), _replace_free(f.right, mapping))
    if isinstance(f, Quantifier):
        inner = {k: v for k, v in mapping.items() if k != f.var}
        return type(f)(f.var, _replace_free(f.body, inner))
    return f


# ---------------------------------------------------------------------------
# Definitions (abbreviations)

@dataclass(frozen=True)
class Definition:
    """Abbreviation name(params) := body, with a quantifier-free body."""
    name: str
    params: Tuple[str, ...]
    body: Formula

    def __post_init__(self):
        object.__setattr__(self, 'params', tuple(self.params))
        if any(isinstance(g, Quantifier) for g in subformulas(self.body)):
            raise SignatureError(f"Body of {self.name} must be quantifier-free")
        if not free_vars(self.body) <= set(self.params):
            raise SignatureError(f"Body of {self.name} mentions variables beyond its parameters")

    def expand(self, args: Tuple[Term, ...]) -> Formula:
        if len(args) != len(self.params):
            raise SignatureError(f"{self.name} expects {len(self.params)} argument(s)")
        return _replace_free(self.body, dict(zip(self.params, args)))


def occ(t: Term) -> Pred:
    return Pred('occ', (t,))


def img(t: Term) -> Pred:
    return Pred('img', (t,))


def lt(t: Term, u: Term) -> Pred:
    return Pred('lt', (t, u))


# occ is the occurrence predicate, img the imaginability predicate, lt the
# consequence-size relation; B(x) abbreviates ~img(x).
BLACK_SWAN_SIGNATURE = Signature(
    predicates={'occ': 1, 'img': 1, 'lt': 2},
    abbreviations={'B': 1},
)

BLACK_SWAN_DEFINITIONS: Dict[str, Definition] = {
    'B': Definition('B', ('x',), Not(img(Var('x')))),
}


def expand_defs(f: Formula, definitions: Mapping[str, Definition] = BLACK_SWAN_DEFINITIONS) -> Formula:
    """Replace every abbreviation application by its definition body."""
    if isinstance(f, Pred):
        definition = definitions.get(f.name)
        return definition.expand(f.args) if definition else f
    if isinstance(f, Not):
        return Not(expand_defs(f.body, definitions))
    if isinstance(f, Binary):
        return type(f)(expand_defs(f.left, definitions), expand_defs(f.right, definitions))
    if isinstance(f, Quantifier):
        return type(f)(f.var, expand_defs(f.body, definitions))
    return f


def check_signature(f: Formula, signature: Signature = BLACK_SWAN_SIGNATURE) -> None:
    """Raise SignatureError unless every predicate application and constant is declared."""
    for g in subformulas(f):
        if isinstance(g, Pred):
            if signature.arity(g.name) != len(g.args):
                raise SignatureError(
                    f"{g.name} expects {signature.arity(g.name)} argument(s), got {len(g.args)}")
            for a in g.args:
                if isinstance(a, Const) and a.name not in signature.constants:
                    raise SignatureError(f"Undeclared constant {a.name!r}")
        elif isinstance(g, Quantifier) and g.var in signature.constants:
            raise SignatureError(f"Constant {g.var!r} cannot be bound by a quantifier")
