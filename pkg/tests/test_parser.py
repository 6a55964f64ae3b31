"""
Tests for the formula parser and printer.
"""

import random

import pytest

from src.errors import ParseError
from src.logic.parser import parse_formula, print_formula, tokenize
from src.logic.syntax import And, Exists, Forall, Implies, Meta, Not, Or, Var, img, lt, occ

from tests.test_syntax import random_formula


x, y = Var('x'), Var('y')


class TestFormulaParser:
    """Test cases for parsing."""

    def test_atoms(self):
        assert parse_formula("occ(x)") == occ(x)
        assert parse_formula("lt(x, y)") == lt(x, y)

    def test_infix_order_sugar(self):
        assert parse_formula("x < y") == lt(x, y)
        assert print_formula(parse_formula("x < y")) == "lt(x,y)"

    def test_conjunction_binds_tighter_than_disjunction(self):
        f = parse_formula("occ(x) /\\ img(x) \\/ lt(x,y)")
        assert f == Or(And(occ(x), img(x)), lt(x, y))

    def test_implication_is_right_associative(self):
        f = parse_formula("occ(x) -> img(x) -> occ(y)")
        assert f == Implies(occ(x), Implies(img(x), occ(y)))

    def test_conjunction_is_left_associative(self):
        f = parse_formula("occ(x) /\\ img(x) /\\ occ(y)")
        assert f == And(And(occ(x), img(x)), occ(y))

    def test_quantifier_as_operand(self):
        f = parse_formula("forall x (occ(x)) -> exists y (img(y))")
        assert f == Implies(Forall('x', occ(x)), Exists('y', img(y)))

    def test_negation_of_quantifier(self):
        assert parse_formula("~forall x (occ(x))") == Not(Forall('x', occ(x)))

    def test_metavariables_only_when_enabled(self):
        assert parse_formula("A -> B", metavariables=True) == Implies(Meta('A'), Meta('B'))
        with pytest.raises(ParseError):
            parse_formula("A -> B")

    def test_abbreviation_parses_as_application(self):
        assert parse_formula("B(x)").name == 'B'

    def test_comments_and_newlines_ignored(self):
        assert parse_formula("occ(x)  # trailing\n /\\ img(x)") == And(occ(x), img(x))


class TestParseErrors:
    """Test cases for error positions and expected-token sets."""

    def test_missing_close_paren(self):
        with pytest.raises(ParseError) as info:
            parse_formula("occ(x")
        assert info.value.line == 1
        assert info.value.column == 6
        assert "')'" in info.value.expected

    def test_undeclared_predicate(self):
        with pytest.raises(ParseError) as info:
            parse_formula("happens(x)")
        assert "undeclared predicate" in info.value.message

    def test_wrong_arity(self):
        with pytest.raises(ParseError):
            parse_formula("lt(x)")

    def test_trailing_input(self):
        with pytest.raises(ParseError):
            parse_formula("occ(x) img(x)")

    def test_bad_character(self):
        with pytest.raises(ParseError) as info:
            parse_formula("occ(x) & img(x)")
        assert info.value.column == 8

    def test_uppercase_quantified_variable(self):
        with pytest.raises(ParseError):
            parse_formula("forall X (occ(X))")

    def test_position_offset_is_respected(self):
        with pytest.raises(ParseError) as info:
            parse_formula("occ(", line=7, column=10)
        assert info.value.line == 7

    def test_tokenize_ends_with_eof(self):
        tokens = tokenize("occ(x)")
        assert [t.kind for t in tokens] == ['IDENT', 'LPAREN', 'IDENT', 'RPAREN', 'EOF']


class TestPrinter:
    """Test cases for precedence-minimal printing."""

    def test_minimal_parentheses(self):
        assert print_formula(Implies(And(occ(x), img(x)), occ(y))) == "occ(x) /\\ img(x) -> occ(y)"
        assert print_formula(Implies(Implies(occ(x), img(x)), occ(y))) == "(occ(x) -> img(x)) -> occ(y)"
        assert print_formula(Not(And(occ(x), img(x)))) == "~(occ(x) /\\ img(x))"

    def test_right_nested_conjunction_keeps_parentheses(self):
        f = And(occ(x), And(img(x), occ(y)))
        assert parse_formula(print_formula(f)) == f

    def test_round_trip_random_formulas(self):
        rng = random.Random(42)
        for _ in range(1000):
            f = random_formula(rng, 5)
            assert parse_formula(print_formula(f)) == f


if __name__ == "__main__":
    pytest.main([__file__])
