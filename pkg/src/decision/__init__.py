"""
Finite decision model: events, outcome tables, decision maps with divergence
and the completeness searches.
"""

from .completeness import (
    CompletenessProperty, CompletenessReport, CompletenessVerdict, MapSearchReport,
    check_completeness, qualifying_subsets, search_decision_maps,
)
from .models import (
    DIVERGE, DecisionMap, Divergence, Event, EventUniverse, OutcomeTable,
    apply_decision, black_swan_set, universe_from_model,
)
from .universe_file import DecisionProblem, bundled_universes, format_universe, load_universe, parse_universe

__all__ = [
    'CompletenessProperty', 'CompletenessReport', 'CompletenessVerdict', 'MapSearchReport',
    'check_completeness', 'qualifying_subsets', 'search_decision_maps',
    'DIVERGE', 'DecisionMap', 'Divergence', 'Event', 'EventUniverse', 'OutcomeTable',
    'apply_decision', 'black_swan_set', 'universe_from_model',
    'DecisionProblem', 'bundled_universes', 'format_universe', 'load_universe', 'parse_universe',
]
