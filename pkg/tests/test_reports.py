"""
Tests for the shared report envelope and human renderings.
"""

import json

import pytest

from src.config.settings import AppConfig
from src.data.reports import (
    SCHEMA_VERSION, ReportFormatError, dump_report, load_report, render_check,
    render_completeness, render_report, save_report,
)
from src.decision.completeness import CompletenessProperty, check_completeness, search_decision_maps
from src.decision.universe_file import load_universe
from src.kernel.checker import check_proof
from src.kernel.corpus import GOLDEN_PROOF, check_corpus, load_corpus_entry
from src.kernel.theories import get_theory
from src.semantics.entailment import check_entailment
from src.semantics.models import Mode


class TestReportEnvelope:
    """Test cases for dump/load of every report kind."""

    def setup_method(self):
        """Set up test fixtures."""
        theory = get_theory('blackswan')
        problem = load_universe('two-black-swans')
        self.reports = {
            'proof-check': check_proof(load_corpus_entry('murphy-implies-ax2')),
            'entailment': check_entailment([], theory.goals['Thm'], 2, Mode.ARBITRARY, AppConfig()),
            'completeness': check_completeness(problem.phi, problem.universe, problem.actions,
                                               problem.outcomes, CompletenessProperty.OCCURRING,
                                               gamma=problem.gamma),
            'map-search': search_decision_maps(problem.universe, problem.actions, problem.outcomes,
                                               CompletenessProperty.OCCURRING),
            'corpus': check_corpus(mutations=3, seed=2),
        }

    def test_envelope_fields(self):
        for kind, report in self.reports.items():
            data = json.loads(dump_report(report))
            assert data['schema_version'] == SCHEMA_VERSION
            assert data['kind'] == kind
            assert isinstance(data['report'], dict)

    def test_round_trip(self):
        for report in self.reports.values():
            assert load_report(dump_report(report)) == report

    def test_save_report(self, tmp_path):
        path = save_report(self.reports['entailment'], tmp_path / "out" / "report.json")
        assert load_report(path.read_text()) == self.reports['entailment']

    def test_rejects_other_versions(self):
        with pytest.raises(ReportFormatError):
            load_report(json.dumps({'schema_version': 99, 'kind': 'corpus', 'report': {}}))

    def test_rejects_unknown_kind(self):
        with pytest.raises(ReportFormatError):
            load_report(json.dumps({'schema_version': SCHEMA_VERSION, 'kind': 'poem', 'report': {}}))

    def test_rejects_invalid_json(self):
        with pytest.raises(ReportFormatError):
            load_report("{not json")

    def test_every_kind_renders(self):
        for report in self.reports.values():
            assert render_report(report)


class TestRenderings:
    """Test cases for human-readable output."""

    def test_summary_line(self):
        text = render_check(check_proof(load_corpus_entry(GOLDEN_PROOF)))
        assert "73/73 lines verified" in text
        assert "accepted" in text

    def test_trace_lists_justifications_and_instantiations(self):
        report = check_proof(load_corpus_entry('murphy-implies-ax2'))
        lines = render_check(report, trace=True).splitlines()
        assert len(lines) == len(report.lines) + 1
        assert "; FO12" in lines[0]
        assert "x := " in lines[0] and "t := x" in lines[0]

    def test_completeness_witness(self):
        problem = load_universe('two-black-swans')
        report = check_completeness(problem.phi, problem.universe, problem.actions, problem.outcomes,
                                    CompletenessProperty.OCCURRING, gamma=problem.gamma)
        text = render_completeness(report)
        assert "incomplete" in text
        assert "{s1} / {s2}" in text
        assert "DIVERGE / DIVERGE" in text


if __name__ == "__main__":
    pytest.main([__file__])
