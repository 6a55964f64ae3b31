"""
Exhaustive completeness search for decision maps.

A decision map is complete (for a property) when every pair of distinct
qualifying event subsets can be told apart by some outcome table: there is a
Gamma under which Phi returns different results for the two subsets.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .models import (
    Decision, DecisionMap, EventUniverse, OutcomeTable, apply_decision,
    black_swan_set, decision_text,
)
from ..config.settings import DecisionBoundsConfig, get_config
from ..errors import BoundsTooLarge, DecisionModelError, MissingTableEntry


logger = logging.getLogger(__name__)

Subset = Tuple[str, ...]

MISSING = "MISSING"
FINITE_STAND_IN_NOTE = ("two or more unimaginable events stand in for an infinite supply of "
                        "Black Swans; two all-unimaginable subsets always collide on DIVERGE")


class CompletenessProperty(Enum):
    """Which event subsets must be separated."""
    COMPLETE = "complete"
    OCCURRING = "occurring"

    @classmethod
    def parse(cls, text: str) -> 'CompletenessProperty':
        aliases = {'complete-wrt-occurring': cls.OCCURRING}
        if text in aliases:
            return aliases[text]
        return cls(text)


class CompletenessVerdict(Enum):
    COMPLETE = "complete"
    INCOMPLETE = "incomplete"


def qualifying_subsets(universe: EventUniverse, prop: CompletenessProperty) -> List[Subset]:
    """Nonempty subsets of the pool, ordered by bitmask over universe event indices."""
    pool = universe.events if prop is CompletenessProperty.COMPLETE else universe.occurring()
    indices = [universe.index_of(e.name) for e in pool]
    subsets = []
    for mask in range(1, 1 << len(universe)):
        members = [k for k in range(len(universe)) if mask >> k & 1]
        if all(k in indices for k in members):
            subsets.append(tuple(universe.events[k].name for k in members))
    return subsets


def subset_pairs(subsets: Sequence[Subset]) -> List[Tuple[Subset, Subset]]:
    return list(combinations(subsets, 2))


def check_bounds(universe: EventUniverse, actions: Sequence[str], outcomes: Sequence[str],
                 bounds: DecisionBoundsConfig) -> int:
    """Raise BoundsTooLarge unless the search fits; returns the number of Gamma tables."""
    if len(actions) > bounds.max_actions:
        raise BoundsTooLarge(f"{len(actions)} actions exceed the bound of {bounds.max_actions}")
    if len(outcomes) > bounds.max_outcomes:
        raise BoundsTooLarge(f"{len(outcomes)} outcomes exceed the bound of {bounds.max_outcomes}")
    if len(universe) > bounds.max_events:
        raise BoundsTooLarge(f"{len(universe)} events exceed the bound of {bounds.max_events}")
    if not actions or not outcomes:
        raise DecisionModelError("At least one action and one outcome are required")
    tables = len(outcomes) ** (len(actions) * len(universe))
    if tables > bounds.max_tables:
        raise BoundsTooLarge(f"{tables} outcome tables exceed the limit of {bounds.max_tables}")
    return tables


def outcome_tables(universe: EventUniverse, actions: Sequence[str], outcomes: Sequence[str]):
    """Every Gamma over actions x events, lexicographic over outcome tuples."""
    for assignment in product(outcomes, repeat=len(actions) * len(universe)):
        yield OutcomeTable.from_assignment(actions, universe.names, outcomes, assignment)


def _safe_decision(phi: DecisionMap, gamma: OutcomeTable, universe: EventUniverse,
                   subset: Subset) -> Optional[Decision]:
    try:
        return apply_decision(phi, gamma, universe.select(subset))
    except MissingTableEntry:
        return None


@dataclass(frozen=True)
class Separator:
    """An outcome table under which Phi tells two subsets apart."""
    first: Subset
    second: Subset
    gamma: Tuple[str, ...]

    def to_dict(self) -> Dict:
        return {'first': list(self.first), 'second': list(self.second), 'gamma': list(self.gamma)}

    @classmethod
    def from_dict(cls, data: Dict) -> 'Separator':
        return cls(tuple(data['first']), tuple(data['second']), tuple(data['gamma']))


@dataclass(frozen=True)
class CompletenessReport:
    """Verdict of a completeness search; a witness pair is present iff incomplete."""
    property: CompletenessProperty
    verdict: CompletenessVerdict
    events: Tuple[str, ...]
    actions: Tuple[str, ...]
    outcomes: Tuple[str, ...]
    black_swans: Tuple[str, ...]
    bounds: Dict[str, int]
    pairs_checked: int = 0
    tables_per_pair: int = 0
    separators: Tuple[Separator, ...] = ()
    unresolved: int = 0
    witness: Optional[Tuple[Subset, Subset]] = None
    witness_results: Optional[Tuple[str, str]] = None
    note: str = FINITE_STAND_IN_NOTE

    def __post_init__(self):
        if (self.witness is None) != (self.verdict is CompletenessVerdict.COMPLETE):
            raise DecisionModelError("A witness pair must be present exactly when the verdict is incomplete")

    @property
    def complete(self) -> bool:
        return self.verdict is CompletenessVerdict.COMPLETE

    def to_dict(self) -> Dict:
        return {
            'property': self.property.value,
            'verdict': self.verdict.value,
            'events': list(self.events),
            'actions': list(self.actions),
            'outcomes': list(self.outcomes),
            'black_swans': list(self.black_swans),
            'bounds': dict(self.bounds),
            'pairs_checked': self.pairs_checked,
            'tables_per_pair': self.tables_per_pair,
            'separators': [s.to_dict() for s in self.separators],
            'unresolved': self.unresolved,
            'witness': [list(s) for s in self.witness] if self.witness else None,
            'witness_results': list(self.witness_results) if self.witness_results else None,
            'note': self.note,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'CompletenessReport':
        witness = data.get('witness')
        results = data.get('witness_results')
        return cls(
            property=CompletenessProperty(data['property']),
            verdict=CompletenessVerdict(data['verdict']),
            events=tuple(data['events']),
            actions=tuple(data['actions']),
            outcomes=tuple(data['outcomes']),
            black_swans=tuple(data['black_swans']),
            bounds=dict(data['bounds']),
            pairs_checked=data['pairs_checked'],
            tables_per_pair=data['tables_per_pair'],
            separators=tuple(Separator.from_dict(s) for s in data['separators']),
            unresolved=data['unresolved'],
            witness=(tuple(witness[0]), tuple(witness[1])) if witness else None,
            witness_results=tuple(results) if results else None,
            note=data.get('note', FINITE_STAND_IN_NOTE),
        )


def _bounds_dict(bounds: DecisionBoundsConfig) -> Dict[str, int]:
    return {'max_actions': bounds.max_actions, 'max_outcomes': bounds.max_outcomes,
            'max_events': bounds.max_events, 'max_tables': bounds.max_tables}


def check_completeness(phi: DecisionMap, universe: EventUniverse, actions: Sequence[str],
                       outcomes: Sequence[str], prop: CompletenessProperty = CompletenessProperty.COMPLETE,
                       bounds: Optional[DecisionBoundsConfig] = None,
                       gamma: Optional[OutcomeTable] = None) -> CompletenessReport:
    """
    Search every Gamma within bounds for one separating each qualifying pair.

    Args:
        phi: Decision map under test
        universe: Events with their flags
        actions: The action set A
        outcomes: The outcome set O
        prop: Which subsets must be separated
        bounds: Search bounds (defaults to the configured ones)
        gamma: Optional fixed table; used only to report the witness results

    Returns:
        CompletenessReport; the witness is the first unseparated pair in order
    """
    bounds = bounds or get_config().decision
    actions, outcomes = tuple(actions), tuple(outcomes)
    tables = check_bounds(universe, actions, outcomes, bounds)
    stray = phi.actions() - set(actions)
    if stray:
        raise DecisionModelError(f"Decision map returns undeclared action(s): {', '.join(sorted(stray))}")

    subsets = qualifying_subsets(universe, prop)
    pairs = subset_pairs(subsets)
    separated: Dict[Tuple[Subset, Subset], Tuple[str, ...]] = {}
    unresolved = 0

    for candidate in outcome_tables(universe, actions, outcomes):
        if len(separated) == len(pairs):
            break
        results = {s: _safe_decision(phi, candidate, universe, s) for s in subsets}
        for pair in pairs:
            if pair in separated:
                continue
            left, right = results[pair[0]], results[pair[1]]
            if left is None or right is None:
                unresolved += 1
            elif left != right:
                separated[pair] = candidate.assignment()

    witness = next((pair for pair in pairs if pair not in separated), None)
    witness_results = None
    if witness is not None:
        logger.info(f"No outcome table separates {set(witness[0])} and {set(witness[1])}")
        if gamma is not None:
            witness_results = tuple(
                decision_text(d) if d is not None else MISSING
                for d in (_safe_decision(phi, gamma, universe, s) for s in witness)
            )
    verdict = CompletenessVerdict.COMPLETE if witness is None else CompletenessVerdict.INCOMPLETE
    logger.info(f"Completeness ({prop.value}): {verdict.value}, "
                f"{len(separated)}/{len(pairs)} pairs separated, {unresolved} unresolved")

    return CompletenessReport(
        property=prop,
        verdict=verdict,
        events=universe.names,
        actions=actions,
        outcomes=outcomes,
        black_swans=tuple(n for n in universe.names if n in black_swan_set(universe)),
        bounds=_bounds_dict(bounds),
        pairs_checked=len(pairs),
        tables_per_pair=tables,
        separators=tuple(Separator(p[0], p[1], separated[p]) for p in pairs if p in separated),
        unresolved=unresolved,
        witness=witness,
        witness_results=witness_results,
    )


# ---------------------------------------------------------------------------
# Search over all decision maps

@dataclass(frozen=True)
class MapSearchReport:
    """How many Phi tables over the relevant vector domain are complete."""
    property: CompletenessProperty
    events: Tuple[str, ...]
    actions: Tuple[str, ...]
    outcomes: Tuple[str, ...]
    decided_by: str
    vector_domain: int
    tables_total: int
    tables_checked: int
    complete_maps: int
    collision: Optional[Tuple[Subset, Subset]] = None
    first_complete: Optional[Tuple[Tuple[Tuple[str, ...], str], ...]] = None

    def to_dict(self) -> Dict:
        return {
            'property': self.property.value,
            'events': list(self.events),
            'actions': list(self.actions),
            'outcomes': list(self.outcomes),
            'decided_by': self.decided_by,
            'vector_domain': self.vector_domain,
            'tables_total': self.tables_total,
            'tables_checked': self.tables_checked,
            'complete_maps': self.complete_maps,
            'collision': [list(s) for s in self.collision] if self.collision else None,
            'first_complete': ([[list(v), a] for v, a in self.first_complete]
                               if self.first_complete is not None else None),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'MapSearchReport':
        collision = data.get('collision')
        first = data.get('first_complete')
        return cls(
            property=CompletenessProperty(data['property']),
            events=tuple(data['events']),
            actions=tuple(data['actions']),
            outcomes=tuple(data['outcomes']),
            decided_by=data['decided_by'],
            vector_domain=data['vector_domain'],
            tables_total=data['tables_total'],
            tables_checked=data['tables_checked'],
            complete_maps=data['complete_maps'],
            collision=(tuple(collision[0]), tuple(collision[1])) if collision else None,
            first_complete=(tuple((tuple(v), a) for v, a in first) if first is not None else None),
        )


def vector_domain(universe: EventUniverse, actions: Sequence[str], outcomes: Sequence[str],
                  prop: CompletenessProperty) -> List[Tuple[str, ...]]:
    """Outcome vectors Phi can receive from a qualifying subset with an imaginable event."""
    lengths = sorted({
        len(actions) * len(s)
        for s in qualifying_subsets(universe, prop)
        if any(universe.event(name).imaginable for name in s)
    })
    return [v for length in lengths for v in product(outcomes, repeat=length)]


def divergence_collision(universe: EventUniverse, prop: CompletenessProperty) -> Optional[Tuple[Subset, Subset]]:
    """First qualifying pair that diverges on both sides, if any."""
    for first, second in subset_pairs(qualifying_subsets(universe, prop)):
        if all(not universe.event(n).imaginable for n in first + second):
            return first, second
    return None


def search_decision_maps(universe: EventUniverse, actions: Sequence[str], outcomes: Sequence[str],
                         prop: CompletenessProperty = CompletenessProperty.COMPLETE,
                         bounds: Optional[DecisionBoundsConfig] = None) -> MapSearchReport:
    """
    Count complete decision maps by checking every Phi table over the vector domain.

    Past max_tables the count is settled only when a qualifying pair diverges on
    both sides; no table can separate that pair, so none is complete.
    """
    bounds = bounds or get_config().decision
    actions, outcomes = tuple(actions), tuple(outcomes)
    check_bounds(universe, actions, outcomes, bounds)
    domain = vector_domain(universe, actions, outcomes, prop)
    total = len(actions) ** len(domain)
    collision = divergence_collision(universe, prop)
    common = dict(property=prop, events=universe.names, actions=actions, outcomes=outcomes,
                  vector_domain=len(domain), tables_total=total, collision=collision)

    if total > bounds.max_tables:
        if collision is None:
            raise BoundsTooLarge(f"{total} decision maps exceed the limit of {bounds.max_tables}")
        logger.info(f"Subsets {set(collision[0])} and {set(collision[1])} both diverge; "
                    f"none of the {total} decision maps can be complete")
        return MapSearchReport(decided_by="divergence-collision", tables_checked=0,
                               complete_maps=0, **common)

    complete = 0
    first_complete = None
    for choice in product(actions, repeat=len(domain)):
        phi = DecisionMap(dict(zip(domain, choice)))
        if check_completeness(phi, universe, actions, outcomes, prop, bounds).complete:
            complete += 1
            if first_complete is None:
                first_complete = tuple(zip(domain, choice))
    logger.info(f"{complete}/{total} decision maps are complete ({prop.value})")
    return MapSearchReport(decided_by="enumeration", tables_checked=total,
                           complete_maps=complete, first_complete=first_complete, **common)
