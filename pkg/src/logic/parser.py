"""
Concrete text syntax for formulas: a regex lexer, a recursive-descent parser
and a precedence-minimal printer.

Precedence, loosest first: ``->`` (right-associative), ``\\/``, ``/\\``
(both left-associative), then ``~`` and the quantifier forms
``forall v (...)`` / ``exists v (...)``. ``t < u`` is sugar for ``lt(t,u)``.

The printer emits the fewest parentheses that re-parse to the same tree;
quantifier bodies are always parenthesized and ``lt`` always prints in
prefix form.
"""

import re
import logging
from collections import namedtuple
from typing import FrozenSet, List, Optional

from .syntax import (
    BLACK_SWAN_SIGNATURE, And, Const, Exists, Forall, Formula, Implies, Meta,
    Not, Or, Pred, Signature, Term, Var,
)
from ..errors import ParseError


logger = logging.getLogger(__name__)

Token = namedtuple('Token', 'kind text line column')

TOKEN_SPEC = [
    ('COMMENT', r'\#[^\n]*'),
    ('NEWLINE', r'\n'),
    ('SPACE', r'[ \t\r]+'),
    ('IMPLIES', r'->'),
    ('AND', r'/\\'),
    ('OR', r'\\/'),
    ('NOT', r'~'),
    ('LPAREN', r'\('),
    ('RPAREN', r'\)'),
    ('COMMA', r','),
    ('LT', r'<'),
    ('IDENT', r'[A-Za-z_][A-Za-z0-9_]*'),
    ('MISMATCH', r'.'),
]
TOKEN_RE = re.compile('|'.join(f'(?P<{name}>{pattern})' for name, pattern in TOKEN_SPEC))

KEYWORDS = frozenset({'forall', 'exists'})
METAVARIABLES = frozenset({'A', 'B', 'C'})

# Display text of each token kind, used in expected-token sets.
TOKEN_TEXT = {
    'IMPLIES': "'->'", 'AND': "'/\\'", 'OR': "'\\/'", 'NOT': "'~'",
    'LPAREN': "'('", 'RPAREN': "')'", 'COMMA': "','", 'LT': "'<'",
    'IDENT': 'identifier', 'EOF': 'end of input',
}

PREC_IMPLIES, PREC_OR, PREC_AND, PREC_UNARY = 1, 2, 3, 4


def tokenize(text: str, line: int = 1, column: int = 1) -> List[Token]:
    """Split text into tokens, dropping whitespace and comments; ends with an EOF token."""
    tokens = []
    line_start = -(column - 1)
    for match in TOKEN_RE.finditer(text):
        kind = match.lastgroup
        col = match.start() - line_start + 1
        if kind == 'NEWLINE':
            line += 1
            line_start = match.end()
            continue
        if kind in ('SPACE', 'COMMENT'):
            continue
        if kind == 'MISMATCH':
            raise ParseError(f"unexpected character {match.group()!r}", line, col)
        tokens.append(Token(kind, match.group(), line, col))
    tokens.append(Token('EOF', '', line, len(text) - line_start + 1))
    return tokens


class FormulaParser:
    """Recursive-descent parser over a token list."""

    def __init__(self, text: str, signature: Signature = BLACK_SWAN_SIGNATURE,
                 metavariables: bool = False, line: int = 1, column: int = 1):
        self.signature = signature
        self.metavariables = metavariables
        self.tokens = tokenize(text, line, column)
        self.pos = 0

    # -- cursor -------------------------------------------------------------

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.current
        if token.kind != 'EOF':
            self.pos += 1
        return token

    def error(self, message: str, expected: FrozenSet[str] = frozenset(), token: Optional[Token] = None):
        token = token or self.current
        found = 'end of input' if token.kind == 'EOF' else repr(token.text)
        return ParseError(f"{message}, found {found}", token.line, token.column,
                          [TOKEN_TEXT.get(e, e) for e in expected])

    def expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            raise self.error("unexpected token", frozenset({kind}))
        return self.advance()

    # -- grammar ------------------------------------------------------------

    def parse(self) -> Formula:
        formula = self.formula()
        if self.current.kind != 'EOF':
            raise self.error("unexpected trailing input", frozenset({'IMPLIES', 'OR', 'AND', 'EOF'}))
        return formula

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.current.kind == 'IMPLIES':
            self.advance()
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.current.kind == 'OR':
            self.advance()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.current.kind == 'AND':
            self.advance()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        token = self.current
        if token.kind == 'NOT':
            self.advance()
            return Not(self.unary())
        if token.kind == 'IDENT' and token.text in KEYWORDS:
            return self.quantified()
        return self.atom()

    def quantified(self) -> Formula:
        keyword = self.advance()
        var = self.expect('IDENT')
        if var.text in KEYWORDS or var.text in self.signature.constants or not var.text[0].islower():
            raise self.error("expected a variable after quantifier", frozenset({'variable'}), var)
        self.expect('LPAREN')
        body = self.formula()
        self.expect('RPAREN')
        cls = Forall if keyword.text == 'forall' else Exists
        return cls(var.text, body)

    def atom(self) -> Formula:
        token = self.current
        if token.kind == 'LPAREN':
            self.advance()
            inner = self.formula()
            self.expect('RPAREN')
            return inner
        if token.kind != 'IDENT':
            raise self.error("expected a formula", frozenset({'NOT', 'LPAREN', 'IDENT', 'forall', 'exists'}))
        if self.peek().kind == 'LPAREN':
            return self.application()
        if self.metavariables and token.text in METAVARIABLES:
            self.advance()
            return Meta(token.text)
        left = self.term()
        if self.current.kind != 'LT':
            raise self.error("expected a predicate application", frozenset({'LPAREN', 'LT'}))
        self.advance()
        right = self.term()
        return Pred('lt', (left, right))

    def application(self) -> Pred:
        name = self.advance()
        if name.text not in self.signature.symbols():
            raise self.error(f"undeclared predicate {name.text!r}", frozenset(), name)
        self.expect('LPAREN')
        args = [self.term()]
        while self.current.kind == 'COMMA':
            self.advance()
            args.append(self.term())
        self.expect('RPAREN')
        arity = self.signature.arity(name.text)
        if arity != len(args):
            raise self.error(f"{name.text} expects {arity} argument(s), got {len(args)}",
                             frozenset(), name)
        return Pred(name.text, tuple(args))

    def term(self) -> Term:
        token = self.current
        if token.kind != 'IDENT' or token.text in KEYWORDS or not token.text[0].islower():
            raise self.error("expected a term", frozenset({'IDENT'}))
        self.advance()
        if token.text in self.signature.constants:
            return Const(token.text)
        return Var(token.text)


def parse_formula(text: str, signature: Signature = BLACK_SWAN_SIGNATURE,
                  metavariables: bool = False, line: int = 1, column: int = 1) -> Formula:
    """Parse formula text; raises ParseError with position and expected tokens."""
    return FormulaParser(text, signature, metavariables, line, column).parse()


# ---------------------------------------------------------------------------
# Printer

def _precedence(f: Formula) -> int:
    if isinstance(f, Implies):
        return PREC_IMPLIES
    if isinstance(f, Or):
        return PREC_OR
    if isinstance(f, And):
        return PREC_AND
    return PREC_UNARY


def _wrap(f: Formula, minimum: int) -> str:
    text = print_formula(f)
    return f"({text})" if _precedence(f) < minimum else text


def print_formula(f: Formula) -> str:
    """Precedence-minimal text for f; parse_formula inverts it."""
    if isinstance(f, Pred):
        return f"{f.name}({','.join(str(a) for a in f.args)})"
    if isinstance(f, Meta):
        return f.name
    if isinstance(f, Not):
        return "~" + _wrap(f.body, PREC_UNARY)
    if isinstance(f, Implies):
        return f"{_wrap(f.left, PREC_OR)} -> {_wrap(f.right, PREC_IMPLIES)}"
    if isinstance(f, Or):
        return f"{_wrap(f.left, PREC_OR)} \\/ {_wrap(f.right, PREC_AND)}"
    if isinstance(f, And):
        return f"{_wrap(f.left, PREC_AND)} /\\ {_wrap(f.right, PREC_UNARY)}"
    if isinstance(f, Forall):
        return f"forall {f.var} ({print_formula(f.body)})"
    if isinstance(f, Exists):
        return f"exists {f.var} ({print_formula(f.body)})"
    raise TypeError(f"Not a formula: {f!r}")
