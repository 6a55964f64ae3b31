"""
Finite-model semantics: evaluation, enumeration and entailment scans.
"""

from .models import (
    FiniteModel, ModelBlock, Mode, count_models, enumerate_models, evaluate, holds, holds_block,
    is_strict_order, is_strict_relation, model_blocks,
    parse_model_text, strict_order_codes,
)
from .entailment import (
    Counterexample, EntailmentChecker, EntailmentReport, SizeTally, check_entailment, satisfying_models,
)

__all__ = [
    'FiniteModel', 'ModelBlock', 'Mode', 'count_models', 'enumerate_models', 'evaluate', 'holds',
    'holds_block', 'model_blocks',
    'is_strict_order', 'is_strict_relation', 'parse_model_text', 'strict_order_codes',
    'Counterexample', 'EntailmentChecker', 'EntailmentReport', 'SizeTally', 'check_entailment',
    'satisfying_models',
]
