"""
Tests for the first-order syntax layer: free variables, substitution and definitions.
"""

import random

import pytest

from src.errors import CaptureError, SignatureError
from src.logic.parser import parse_formula
from src.logic.syntax import (
    And, Definition, Exists, Forall, Implies, Not, Or, Pred, Signature, Var,
    check_signature, expand_defs, free_vars, img, is_closed, is_substitutable, lt, occ, substitute,
)
from src.semantics.models import FiniteModel, evaluate


VARIABLES = ('x', 'y', 'z')


def random_formula(rng: random.Random, depth: int):
    """Random formula over occ/img/lt/B with variables x, y, z."""
    if depth == 0 or rng.random() < 0.25:
        v, w = Var(rng.choice(VARIABLES)), Var(rng.choice(VARIABLES))
        return rng.choice([occ(v), img(v), lt(v, w), Pred('B', (v,))])
    kind = rng.randrange(6)
    if kind == 0:
        return Not(random_formula(rng, depth - 1))
    if kind in (1, 2, 3):
        cls = (And, Or, Implies)[kind - 1]
        return cls(random_formula(rng, depth - 1), random_formula(rng, depth - 1))
    cls = Forall if kind == 4 else Exists
    return cls(rng.choice(VARIABLES), random_formula(rng, depth - 1))


class TestFreeVariables:
    """Test cases for free variables and closedness."""

    def test_quantifier_binds_its_variable(self):
        assert free_vars(parse_formula("forall x (lt(x,y))")) == {'y'}

    def test_variable_free_and_bound_in_different_places(self):
        f = parse_formula("occ(x) /\\ exists x (img(x))")
        assert free_vars(f) == {'x'}
        assert not is_closed(f)

    def test_theory_formula_is_closed(self):
        assert is_closed(parse_formula("exists z (occ(z) /\\ ~img(z))"))


class TestSubstitution:
    """Test cases for capture-avoiding substitution."""

    def test_replaces_free_occurrences(self):
        f = parse_formula("occ(x) /\\ forall y (lt(x,y))")
        expected = parse_formula("occ(z) /\\ forall y (lt(z,y))")
        assert substitute(f, 'x', Var('z')) == expected

    def test_bound_occurrences_untouched(self):
        f = parse_formula("forall x (occ(x))")
        assert substitute(f, 'x', Var('y')) == f

    def test_capture_is_refused(self):
        f = parse_formula("forall y (lt(x,y))")
        assert not is_substitutable(f, 'x', Var('y'))
        with pytest.raises(CaptureError):
            substitute(f, 'x', Var('y'))

    def test_substitutable_when_variable_not_free_under_binder(self):
        f = parse_formula("occ(x) /\\ forall y (img(y))")
        assert is_substitutable(f, 'x', Var('y'))

    def test_evaluation_commutes_with_substitution(self):
        """eval(f[x:=v], env) == eval(f, env[x -> env(v)]) on 1000 random instances."""
        rng = random.Random(1729)
        checked = 0
        while checked < 1000:
            f = random_formula(rng, 4)
            x, v = rng.choice(VARIABLES), rng.choice(VARIABLES)
            if not is_substitutable(f, x, Var(v)):
                continue
            n = rng.randint(1, 3)
            model = FiniteModel.from_index(n, rng.randrange(1 << (n * n + 2 * n)))
            env = {name: rng.randrange(n) for name in VARIABLES}
            left = evaluate(model, substitute(f, x, Var(v)), env)
            right = evaluate(model, f, {**env, x: env[v]})
            assert left == right, f"{f} with {x}:={v} in {model}"
            checked += 1
        assert checked == 1000

    def test_free_variables_after_substitution(self):
        rng = random.Random(271828)
        checked = 0
        while checked < 1000:
            f = random_formula(rng, 4)
            x, v = rng.choice(VARIABLES), rng.choice(VARIABLES)
            if not is_substitutable(f, x, Var(v)):
                continue
            result = substitute(f, x, Var(v))
            if x in free_vars(f):
                assert free_vars(result) == (free_vars(f) - {x}) | {v}, f"{f} with {x}:={v}"
            else:
                assert result == f
            checked += 1


class TestDefinitions:
    """Test cases for abbreviations and signatures."""

    def test_black_swan_abbreviation_expands(self):
        assert expand_defs(parse_formula("B(x)")) == Not(img(Var('x')))

    def test_expansion_inside_quantifier(self):
        f = parse_formula("exists z (occ(z) /\\ B(z))")
        assert expand_defs(f) == parse_formula("exists z (occ(z) /\\ ~img(z))")

    def test_expansion_is_idempotent_and_keeps_free_variables(self):
        rng = random.Random(314159)
        for _ in range(1000):
            f = random_formula(rng, 4)
            expanded = expand_defs(f)
            assert expand_defs(expanded) == expanded
            assert free_vars(expanded) == free_vars(f)

    def test_definition_body_must_be_quantifier_free(self):
        with pytest.raises(SignatureError):
            Definition('D', ('x',), Forall('y', lt(Var('x'), Var('y'))))

    def test_definition_body_limited_to_parameters(self):
        with pytest.raises(SignatureError):
            Definition('D', ('x',), lt(Var('x'), Var('y')))

    def test_signature_rejects_uppercase_predicate(self):
        with pytest.raises(SignatureError):
            Signature({'Occ': 1})

    def test_signature_rejects_zero_arity(self):
        with pytest.raises(SignatureError):
            Signature({'p': 0})

    def test_check_signature_rejects_undeclared_predicate(self):
        with pytest.raises(SignatureError):
            check_signature(Pred('happens', (Var('x'),)))

    def test_check_signature_rejects_wrong_arity(self):
        with pytest.raises(SignatureError):
            check_signature(Pred('lt', (Var('x'),)))


if __name__ == "__main__":
    pytest.main([__file__])
