"""
Tests for the bundled proof corpus and the mutation suite.
"""

import pytest

from src.config.settings import AppConfig
from src.errors import KernelError
from src.kernel.checker import check_proof
from src.kernel.corpus import (
    GOLDEN_PROOF, CorpusReport, check_corpus, corpus_names, list_corpus, load_corpus_entry,
)
from src.kernel.mutations import MutationKind, ScriptMutator, generate_mutations
from src.kernel.script import format_script, parse_script
from src.kernel.theories import get_theory
from src.logic.syntax import expand_defs, free_vars
from src.semantics.entailment import satisfying_models
from src.semantics.models import Mode, evaluate


class TestBundledProofs:
    """Test cases for the bundled proofs."""

    def setup_method(self):
        """Set up test fixtures."""
        self.golden = load_corpus_entry(GOLDEN_PROOF)
        self.murphy = load_corpus_entry('murphy-implies-ax2')

    def test_corpus_names(self):
        assert corpus_names() == ['blackswan-thm-73', 'murphy-implies-ax2']

    def test_golden_proof_verifies(self):
        report = check_proof(self.golden)
        assert report.accepted
        assert report.lines_ok == 73
        assert len(report.lines) == 73

    def test_golden_proof_concludes_the_theorem(self):
        last = expand_defs(self.golden.lines[-1].formula)
        assert last == expand_defs(get_theory('blackswan').goals['Thm'])

    def test_murphy_derivation_verifies(self):
        report = check_proof(self.murphy)
        assert report.accepted
        assert report.theory == 'murphy'
        assert len(report.lines) == 31

    def test_canonical_text_is_stable(self):
        canonical = format_script(self.golden)
        assert format_script(parse_script(canonical, name=GOLDEN_PROOF)) == canonical

    def test_every_line_is_used(self):
        cited = {p for line in self.golden.lines for p in line.justification.premises}
        assert cited == set(range(1, 73))

    def test_missing_entry(self):
        with pytest.raises(KernelError):
            load_corpus_entry('no-such-proof')

    def test_conclusions_hold_in_every_small_model_of_the_axioms(self):
        for name, script in list_corpus():
            theory = get_theory(script.theory)
            final = script.lines[-1].formula
            models = 0
            for model in satisfying_models(list(theory.axioms.values()), 3, Mode.ARBITRARY, AppConfig()):
                assert evaluate(model, final), f"{name}: final line fails in {model}"
                models += 1
            assert models > 0, name


class TestMutations:
    """Test cases for the seeded mutation generator."""

    def setup_method(self):
        """Set up test fixtures."""
        self.golden = load_corpus_entry(GOLDEN_PROOF)

    def test_generation_is_deterministic(self):
        first = [m.description for m in generate_mutations(self.golden, 25, seed=11)]
        second = [m.description for m in generate_mutations(self.golden, 25, seed=11)]
        assert first == second

    def test_each_mutation_changes_one_line(self):
        for mutation in generate_mutations(self.golden, 30, seed=5):
            changed = [a.index for a, b in zip(self.golden.lines, mutation.script.lines) if a != b]
            assert changed == [mutation.line]

    def test_all_kinds_produced(self):
        kinds = {m.kind for m in generate_mutations(self.golden, 60, seed=3)}
        assert kinds == set(MutationKind)

    def test_rename_introduces_fresh_free_variable(self):
        mutation = ScriptMutator(8).rename_bound(self.golden)
        assert mutation.kind is MutationKind.RENAME
        before = free_vars(self.golden.line(mutation.line).formula)
        after = free_vars(mutation.script.line(mutation.line).formula)
        assert after - before

    def test_mutations_are_rejected_at_or_after_the_mutated_line(self):
        mutations = generate_mutations(self.golden, 120, seed=20240229)
        assert len(mutations) >= 100
        for mutation in mutations:
            report = check_proof(mutation.script)
            assert not report.accepted, mutation.description
            assert report.first_failure is None or report.first_failure >= mutation.line, mutation.description


class TestCorpusCheck:
    """Test cases for the corpus self-check."""

    def test_plain_recheck(self):
        report = check_corpus()
        assert report.ok
        assert report.mutations_run == 0
        assert all(e.accepted for e in report.entries)

    def test_recheck_with_mutations(self):
        report = check_corpus(mutations=100, seed=7)
        assert report.ok
        assert report.mutations_rejected == 100
        assert report.false_accepts == ()

    def test_report_round_trip(self):
        report = check_corpus(mutations=5, seed=1)
        assert CorpusReport.from_dict(report.to_dict()) == report


if __name__ == "__main__":
    pytest.main([__file__])
