"""
Decision-model data types: events, outcome tables (Gamma), decision maps (Phi)
and the divergence marker.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import DecisionModelError, MissingTableEntry
from ..semantics.models import FiniteModel, is_strict_order, is_strict_relation


logger = logging.getLogger(__name__)

OutcomeVector = Tuple[str, ...]


class Divergence(Enum):
    """Result of a decision that never terminates."""
    DIVERGE = "DIVERGE"

    def __str__(self):
        return self.value


DIVERGE = Divergence.DIVERGE
Decision = Union[str, Divergence]


@dataclass(frozen=True)
class Event:
    name: str
    occurs: bool
    imaginable: bool

    @property
    def is_black_swan(self) -> bool:
        return self.occurs and not self.imaginable


@dataclass(frozen=True)
class EventUniverse:
    """Indexed events with occurrence/imaginability flags and an optional consequence order."""
    events: Tuple[Event, ...]
    order: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'events', tuple(self.events))
        object.__setattr__(self, 'order', tuple(tuple(p) for p in self.order))
        names = [e.name for e in self.events]
        if len(set(names)) != len(names):
            raise DecisionModelError("Event names must be unique")
        index = {name: k for k, name in enumerate(names)}
        matrix = np.zeros((len(names), len(names)), dtype=bool)
        for smaller, larger in self.order:
            if smaller not in index or larger not in index:
                raise DecisionModelError(f"Order mentions unknown event: {smaller} < {larger}")
            matrix[index[smaller], index[larger]] = True
        if not is_strict_relation(matrix):
            raise DecisionModelError("Event order must be irreflexive and transitive")

    def __len__(self):
        return len(self.events)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(e.name for e in self.events)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise DecisionModelError(f"Unknown event: {name}") from None

    def event(self, name: str) -> Event:
        return self.events[self.index_of(name)]

    def select(self, names: Iterable[str]) -> Tuple[Event, ...]:
        """Events with the given names, in universe order."""
        wanted = set(names)
        unknown = wanted - set(self.names)
        if unknown:
            raise DecisionModelError(f"Unknown event(s): {', '.join(sorted(unknown))}")
        return tuple(e for e in self.events if e.name in wanted)

    def occurring(self) -> Tuple[Event, ...]:
        return tuple(e for e in self.events if e.occurs)


def black_swan_set(universe: EventUniverse) -> FrozenSet[str]:
    """Names of events that occur and are not imaginable."""
    return frozenset(e.name for e in universe.events if e.is_black_swan)


def universe_from_model(m: FiniteModel, prefix: str = "e") -> EventUniverse:
    """Events e0..e{n-1} carrying the model's occ/img flags; lt becomes the order when strict."""
    events = tuple(Event(f"{prefix}{i}", m.occ[i], m.img[i]) for i in range(m.n))
    order = tuple((f"{prefix}{i}", f"{prefix}{j}") for i, j in m.lt_pairs()) if is_strict_order(m) else ()
    return EventUniverse(events, order)


@dataclass(frozen=True)
class OutcomeTable:
    """Gamma: a total map from (action, event) to outcome."""
    actions: Tuple[str, ...]
    events: Tuple[str, ...]
    outcomes: Tuple[str, ...]
    entries: Mapping[Tuple[str, str], str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'actions', tuple(self.actions))
        object.__setattr__(self, 'events', tuple(self.events))
        object.__setattr__(self, 'outcomes', tuple(self.outcomes))
        object.__setattr__(self, 'entries', dict(self.entries))
        missing = [(a, e) for a in self.actions for e in self.events if (a, e) not in self.entries]
        if missing:
            a, e = missing[0]
            raise DecisionModelError(f"Outcome table is not total: no outcome for ({a}, {e})")
        bad = {o for o in self.entries.values() if o not in self.outcomes}
        if bad:
            raise DecisionModelError(f"Undeclared outcome(s): {', '.join(sorted(bad))}")

    @classmethod
    def from_assignment(cls, actions: Sequence[str], events: Sequence[str], outcomes: Sequence[str],
                        assignment: Sequence[str]) -> 'OutcomeTable':
        """Build Gamma from outcomes listed in (action, event) order."""
        keys = [(a, e) for a in actions for e in events]
        return cls(tuple(actions), tuple(events), tuple(outcomes), dict(zip(keys, assignment)))

    def assignment(self) -> Tuple[str, ...]:
        return tuple(self.entries[(a, e)] for a in self.actions for e in self.events)

    def outcome(self, action: str, event: str) -> str:
        return self.entries[(action, event)]

    def vector(self, events: Iterable[Event]) -> OutcomeVector:
        """Gamma^n: outcomes ordered by (action index, event index)."""
        position = {name: k for k, name in enumerate(self.events)}
        ordered = sorted((e.name for e in events), key=lambda name: position[name])
        return tuple(self.entries[(a, name)] for a in self.actions for name in ordered)


@dataclass(frozen=True)
class DecisionMap:
    """Phi: outcome vectors to actions; P is carried but never varied."""
    table: Mapping[OutcomeVector, str] = field(default_factory=dict)
    default: Optional[str] = None
    associated_info: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'table', {tuple(k): v for k, v in self.table.items()})
        object.__setattr__(self, 'associated_info', tuple(self.associated_info))

    def lookup(self, vector: OutcomeVector) -> str:
        if vector in self.table:
            return self.table[vector]
        if self.default is not None:
            return self.default
        raise MissingTableEntry(f"No decision for outcome vector ({','.join(vector)})")

    def actions(self) -> FrozenSet[str]:
        used = set(self.table.values())
        if self.default is not None:
            used.add(self.default)
        return frozenset(used)


def apply_decision(phi: DecisionMap, gamma: OutcomeTable, events: Iterable[Event]) -> Decision:
    """DIVERGE when no event is imaginable, otherwise Phi of the Gamma outcome vector."""
    events = tuple(events)
    if all(not e.imaginable for e in events):
        return DIVERGE
    return phi.lookup(gamma.vector(events))


def decision_text(decision: Decision) -> str:
    return str(decision)


def decision_from_text(text: str) -> Decision:
    return DIVERGE if text == DIVERGE.value else text
