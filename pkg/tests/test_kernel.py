"""
Tests for the proof kernel: schemas, rules, theories, scripts and the checker.
"""

import pytest

from src.errors import KernelError, ParseError, TheoryError, UnknownTheory
from src.kernel.checker import Verdict, check_line, check_proof
from src.kernel.corpus import GOLDEN_PROOF, corpus_names, load_corpus_entry
from src.kernel.mutations import generate_mutations
from src.kernel.rules import Rule, check_rule
from src.kernel.schemas import match_schema, matching_schemas
from src.kernel.script import JustificationKind, format_script, parse_script
from src.kernel.theories import Theory, get_theory, list_theories
from src.logic.parser import parse_formula
from src.logic.syntax import Var


IDENTITY_PROOF = """\
theory pure
goal occ(x) -> occ(x)
1. occ(x) -> (occ(x) -> occ(x)) ; FO1
2. occ(x) -> ((occ(x) -> occ(x)) -> occ(x)) ; FO1
3. (occ(x) -> (occ(x) -> occ(x))) -> ((occ(x) -> ((occ(x) -> occ(x)) -> occ(x))) -> (occ(x) -> occ(x))) ; FO2
4. (occ(x) -> ((occ(x) -> occ(x)) -> occ(x))) -> (occ(x) -> occ(x)) ; MP 1 3
5. occ(x) -> occ(x) ; MP 2 4  # identity
"""


def f(text):
    return parse_formula(text)


class TestSchemas:
    """Test cases for axiom-schema matching."""

    def test_propositional_instance(self):
        inst = match_schema(f("occ(x) -> (img(x) -> occ(x))"), 'FO1')
        assert inst is not None
        assert inst.as_text() == {'A': 'occ(x)', 'B': 'img(x)'}

    def test_metavariable_must_bind_consistently(self):
        assert match_schema(f("occ(x) -> (img(x) -> img(x))"), 'FO1') is None

    def test_double_negation(self):
        assert match_schema(f("~~lt(x,y) -> lt(x,y)"), 'FO7') is not None

    def test_universal_instantiation_recovers_term(self):
        inst = match_schema(f("forall x (lt(x,y)) -> lt(z,y)"), 'FO12')
        assert inst.var == 'x'
        assert inst.term == Var('z')

    def test_existential_generalisation(self):
        inst = match_schema(f("occ(y) /\\ ~img(y) -> exists z (occ(z) /\\ ~img(z))"), 'FO11')
        assert inst is not None
        assert inst.term == Var('y')

    def test_vacuous_instantiation(self):
        assert match_schema(f("forall x (occ(y)) -> occ(y)"), 'FO12') is not None

    def test_capturing_instantiation_rejected(self):
        assert match_schema(f("forall x (exists y (lt(x,y))) -> exists y (lt(y,y))"), 'FO12') is None

    def test_inconsistent_term_rejected(self):
        assert match_schema(f("forall x (lt(x,x)) -> lt(y,z)"), 'FO12') is None

    def test_unknown_schema(self):
        with pytest.raises(ValueError):
            match_schema(f("occ(x)"), 'FO13')

    def test_matching_schemas_lists_all(self):
        assert matching_schemas(f("occ(x) /\\ occ(x) -> occ(x)")) == ('FO8', 'FO9')


class TestRules:
    """Test cases for the inference rules."""

    def test_modus_ponens(self):
        assert check_rule([f("occ(x)"), f("occ(x) -> img(x)")], f("img(x)"), Rule.MP).ok

    def test_modus_ponens_wrong_order(self):
        assert not check_rule([f("occ(x) -> img(x)"), f("occ(x)")], f("img(x)"), Rule.MP).ok

    def test_r1_generalises_consequent(self):
        assert check_rule([f("occ(y) -> img(x)")], f("occ(y) -> forall x (img(x))"), Rule.R1).ok

    def test_r1_side_condition(self):
        check = check_rule([f("occ(x) -> img(x)")], f("occ(x) -> forall x (img(x))"), Rule.R1)
        assert not check.ok
        assert "free" in check.diagnostic

    def test_r2_generalises_antecedent(self):
        assert check_rule([f("occ(x) -> img(y)")], f("exists x (occ(x)) -> img(y)"), Rule.R2).ok

    def test_r2_side_condition(self):
        assert not check_rule([f("occ(x) -> img(x)")], f("exists x (occ(x)) -> img(x)"), Rule.R2).ok

    def test_r3_exportation(self):
        premise = f("occ(x) /\\ img(x) -> lt(x,x)")
        assert check_rule([premise], f("img(x) -> (occ(x) -> lt(x,x))"), Rule.R3).ok
        assert not check_rule([premise], f("occ(x) -> (img(x) -> lt(x,x))"), Rule.R3).ok

    def test_arity_mismatch(self):
        assert not check_rule([f("occ(x)")], f("occ(x)"), Rule.MP).ok


class TestTheories:
    """Test cases for the theory registry."""

    def test_builtin_theories(self):
        assert {'blackswan', 'murphy', 'ordered-blackswan', 'pure'} <= set(list_theories())
        blackswan = get_theory('blackswan')
        assert set(blackswan.axioms) == {'Ax1', 'Ax2', 'Murphy', 'OpenUniverse'}
        assert set(blackswan.goals) == {'Thm'}

    def test_unknown_theory(self):
        with pytest.raises(UnknownTheory):
            get_theory('nope')
        with pytest.raises(KeyError) as info:
            get_theory('nope')
        assert str(info.value) == "Unknown theory: nope"

    def test_open_axiom_rejected(self):
        with pytest.raises(TheoryError):
            Theory('open', axioms={'Bad': f("occ(x)")})

    def test_formula_lookup(self):
        theory = get_theory('murphy')
        assert theory.formula('Ax2') == theory.goals['Ax2']
        with pytest.raises(KernelError):
            theory.formula('Ax1')


class TestProofScripts:
    """Test cases for the proof-script text format."""

    def test_parse_identity_proof(self):
        script = parse_script(IDENTITY_PROOF, name="identity")
        assert script.theory == 'pure'
        assert len(script) == 5
        assert script.goal_formula == f("occ(x) -> occ(x)")
        assert script.line(4).justification.kind is JustificationKind.MP
        assert script.line(4).justification.premises == (1, 3)
        assert script.line(5).note == "identity"

    def test_canonical_form_is_fixed_point(self):
        canonical = format_script(parse_script(IDENTITY_PROOF))
        assert format_script(parse_script(canonical)) == canonical
        assert "# identity" in canonical

    def test_empty_script(self):
        with pytest.raises(ParseError):
            parse_script("")

    def test_missing_goal(self):
        with pytest.raises(ParseError):
            parse_script("theory pure\n1. occ(x) -> (occ(x) -> occ(x)) ; FO1\n")

    def test_line_numbers_must_be_consecutive(self):
        text = "theory pure\ngoal occ(x)\n1. occ(x) ; FO1\n3. occ(x) ; FO1\n"
        with pytest.raises(ParseError) as info:
            parse_script(text)
        assert info.value.line == 4

    def test_missing_separator(self):
        with pytest.raises(ParseError):
            parse_script("theory pure\ngoal occ(x)\n1. occ(x) FO1\n")

    def test_unknown_justification(self):
        with pytest.raises(ParseError):
            parse_script("theory pure\ngoal occ(x)\n1. occ(x) ; FO99\n")

    def test_formula_error_position_is_absolute(self):
        with pytest.raises(ParseError) as info:
            parse_script("theory pure\ngoal occ(x)\n1. occ(x ; FO1\n")
        assert info.value.line == 3
        assert info.value.column > 3


class TestChecker:
    """Test cases for line-by-line proof checking."""

    def check(self, text):
        return check_proof(parse_script(text, name="t"))

    def test_identity_proof_accepted(self):
        report = self.check(IDENTITY_PROOF)
        assert report.verdict is Verdict.ACCEPTED
        assert report.lines_ok == 5
        assert report.first_failure is None
        assert report.lines[0].instantiation == {'A': 'occ(x)', 'B': 'occ(x)'}

    def test_axiom_line(self):
        report = self.check("theory blackswan\ngoal forall x (exists y (lt(x,y)))\n"
                            "1. forall x (exists y (lt(x,y))) ; AX OpenUniverse\n")
        assert report.accepted

    def test_unknown_axiom(self):
        report = self.check("theory murphy\ngoal occ(x)\n1. forall x (exists y (lt(x,y))) ; AX Ax1\n")
        assert not report.accepted
        assert "no axiom" in report.lines[0].reason

    def test_goal_mismatch(self):
        report = self.check("theory pure\ngoal img(x) -> img(x)\n1. occ(x) -> (occ(x) -> occ(x)) ; FO1\n")
        assert not report.accepted
        assert report.lines_ok == 1
        assert not report.goal_ok

    def test_forward_reference(self):
        text = ("theory pure\ngoal img(x)\n"
                "1. occ(x) ; MP 2 3\n"
                "2. occ(x) -> (occ(x) -> occ(x)) ; FO1\n"
                "3. occ(x) -> (occ(x) -> occ(x)) ; FO1\n")
        report = self.check(text)
        assert report.first_failure == 1
        assert "forward" in report.lines[0].reason

    def test_bad_line_does_not_poison_later_lines(self):
        text = ("theory pure\ngoal occ(x) -> (img(x) -> occ(x))\n"
                "1. occ(x) -> (img(x) -> img(x)) ; FO1\n"
                "2. occ(x) -> (img(x) -> occ(x)) ; FO1\n")
        report = self.check(text)
        assert [r.ok for r in report.lines] == [False, True]
        assert report.verdict is Verdict.REJECTED

    def test_quantifier_rules_in_a_proof(self):
        text = ("theory pure\ngoal exists x (occ(x) /\\ img(y)) -> img(y)\n"
                "1. occ(x) /\\ img(y) -> img(y) ; FO9\n"
                "2. exists x (occ(x) /\\ img(y)) -> img(y) ; R2 1\n")
        assert self.check(text).accepted

    def test_unknown_goal_name(self):
        with pytest.raises(KernelError):
            self.check("theory blackswan\ngoal Missing\n1. occ(x) -> (occ(x) -> occ(x)) ; FO1\n")

    def test_report_round_trip(self):
        report = self.check(IDENTITY_PROOF)
        assert type(report).from_dict(report.to_dict()) == report

    def test_lines_depend_only_on_earlier_lines(self):
        scripts = [load_corpus_entry(name) for name in corpus_names()]
        scripts += [m.script for m in generate_mutations(load_corpus_entry(GOLDEN_PROOF), 10, seed=99)]
        for script in scripts:
            theory = get_theory(script.theory)
            report = check_proof(script, theory)
            for k in range(1, len(script) + 1):
                assert check_line(script.prefix(k), k, theory) == report.lines[k - 1]


if __name__ == "__main__":
    pytest.main([__file__])
