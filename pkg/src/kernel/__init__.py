"""
Hilbert-style proof kernel: schemas, rules, theories, scripts and the checker.
"""

from .checker import CheckReport, LineResult, Verdict, check_line, check_proof
from .corpus import CorpusReport, check_corpus, list_corpus, load_corpus_entry
from .rules import Rule, RuleCheck, check_rule
from .schemas import SCHEMA_IDS, Instantiation, match_schema
from .script import Justification, JustificationKind, ProofLine, ProofScript, format_script, parse_script
from .theories import Theory, get_theory, list_theories, register_theory

__all__ = [
    'CheckReport', 'LineResult', 'Verdict', 'check_line', 'check_proof',
    'CorpusReport', 'check_corpus', 'list_corpus', 'load_corpus_entry',
    'Rule', 'RuleCheck', 'check_rule',
    'SCHEMA_IDS', 'Instantiation', 'match_schema',
    'Justification', 'JustificationKind', 'ProofLine', 'ProofScript', 'format_script', 'parse_script',
    'Theory', 'get_theory', 'list_theories', 'register_theory',
]
