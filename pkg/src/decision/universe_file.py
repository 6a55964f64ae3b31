"""
Line-oriented universe/decision file format.

    event <name> occ=<T|F> img=<T|F>
    action <name>
    outcome <name>
    gamma <action> <event> = <outcome>
    phi <o1,o2,...> = <action>
    phi default = <action>
    order <event> < <event>
    info <token>

Blank lines and ``#`` comments are ignored.

Gamma lines are optional. The completeness checks range over every outcome
table, so a file's own Gamma only supplies the results reported for the
witness pair. A file without gamma lines loads with ``gamma=None``; a file
with some gamma lines must cover every action x event.
"""

import re
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .models import DecisionMap, Event, EventUniverse, OutcomeTable
from ..errors import DecisionModelError, UniverseFileError


logger = logging.getLogger(__name__)

UNIVERSES_DIR = Path(__file__).parent / "universes"
NAME_RE = re.compile(r'[A-Za-z_][A-Za-z0-9_\-]*\Z')
FLAG_RE = re.compile(r'(occ|img)=([TF])\Z')
KEYWORDS = ('event', 'action', 'outcome', 'gamma', 'phi', 'order', 'info')


@dataclass(frozen=True)
class DecisionProblem:
    """Everything a universe file declares."""
    universe: EventUniverse
    actions: Tuple[str, ...]
    outcomes: Tuple[str, ...]
    gamma: Optional[OutcomeTable]
    phi: DecisionMap
    name: str = ""


@dataclass
class _Builder:
    events: List[Event] = field(default_factory=list)
    actions: List[str] = field(default_factory=list)
    outcomes: List[str] = field(default_factory=list)
    gamma: Dict[Tuple[str, str], str] = field(default_factory=dict)
    phi: Dict[Tuple[str, ...], str] = field(default_factory=dict)
    default: Optional[str] = None
    order: List[Tuple[str, str]] = field(default_factory=list)
    info: List[str] = field(default_factory=list)
    last_line: int = 0


def _words(text: str) -> List[Tuple[str, int]]:
    """Whitespace-separated words with their 1-based columns."""
    return [(m.group(0), m.start() + 1) for m in re.finditer(r'\S+', text)]


def _name(word: Tuple[str, int], line: int, what: str) -> str:
    text, column = word
    if not NAME_RE.match(text):
        raise UniverseFileError(f"invalid {what} name {text!r}", line, column, [what])
    return text


def _declared(word: Tuple[str, int], pool: List[str], line: int, what: str) -> str:
    if word[0] not in pool:
        raise UniverseFileError(f"undeclared {what} {word[0]!r}", line, word[1], pool)
    return word[0]


def _expect(words, index: int, literal: str, line: int) -> None:
    if len(words) <= index or words[index][0] != literal:
        column = words[index][1] if len(words) > index else (words[-1][1] + len(words[-1][0]))
        raise UniverseFileError(f"expected {literal!r}", line, column, [literal])


def _arity(words, count: int, line: int, form: str) -> None:
    if len(words) != count:
        column = words[min(count, len(words) - 1)][1]
        raise UniverseFileError(f"expected '{form}'", line, column)


def _parse_line(b: _Builder, words: List[Tuple[str, int]], line: int) -> None:
    keyword = words[0][0]
    event_names = [e.name for e in b.events]

    if keyword == 'event':
        _arity(words, 4, line, "event <name> occ=<T|F> img=<T|F>")
        name = _name(words[1], line, 'event')
        if name in event_names:
            raise UniverseFileError(f"duplicate event {name!r}", line, words[1][1])
        flags = {}
        for text, column in words[2:]:
            match = FLAG_RE.match(text)
            if not match or match.group(1) in flags:
                raise UniverseFileError(f"bad flag {text!r}", line, column, ['occ=T', 'occ=F', 'img=T', 'img=F'])
            flags[match.group(1)] = match.group(2) == 'T'
        b.events.append(Event(name, flags['occ'], flags['img']))
    elif keyword in ('action', 'outcome'):
        _arity(words, 2, line, f"{keyword} <name>")
        pool = b.actions if keyword == 'action' else b.outcomes
        name = _name(words[1], line, keyword)
        if name in pool:
            raise UniverseFileError(f"duplicate {keyword} {name!r}", line, words[1][1])
        pool.append(name)
    elif keyword == 'gamma':
        _arity(words, 5, line, "gamma <action> <event> = <outcome>")
        action = _declared(words[1], b.actions, line, 'action')
        event = _declared(words[2], event_names, line, 'event')
        _expect(words, 3, '=', line)
        outcome = _declared(words[4], b.outcomes, line, 'outcome')
        if (action, event) in b.gamma:
            raise UniverseFileError(f"duplicate gamma entry for ({action}, {event})", line, words[1][1])
        b.gamma[(action, event)] = outcome
    elif keyword == 'phi':
        _arity(words, 4, line, "phi <o1,o2,...> = <action>")
        _expect(words, 2, '=', line)
        action = _declared(words[3], b.actions, line, 'action')
        if words[1][0] == 'default':
            b.default = action
            return
        vector = tuple(words[1][0].split(','))
        for outcome in vector:
            if outcome not in b.outcomes:
                raise UniverseFileError(f"undeclared outcome {outcome!r}", line, words[1][1], b.outcomes)
        if vector in b.phi:
            raise UniverseFileError(f"duplicate phi entry for ({words[1][0]})", line, words[1][1])
        b.phi[vector] = action
    elif keyword == 'order':
        _arity(words, 4, line, "order <event> < <event>")
        smaller = _declared(words[1], event_names, line, 'event')
        _expect(words, 2, '<', line)
        larger = _declared(words[3], event_names, line, 'event')
        b.order.append((smaller, larger))
    elif keyword == 'info':
        _arity(words, 2, line, "info <token>")
        b.info.append(words[1][0])
    else:
        raise UniverseFileError(f"unknown declaration {keyword!r}", line, words[0][1], KEYWORDS)


def parse_universe(text: str, name: str = "") -> DecisionProblem:
    """Parse a universe file; totality and order violations raise UniverseFileError."""
    b = _Builder()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        words = _words(raw.split('#', 1)[0])
        if not words:
            continue
        _parse_line(b, words, line_no)
        b.last_line = line_no

    if not b.events:
        raise UniverseFileError("no events declared", b.last_line or 1, 1, ['event'])
    if not b.actions or not b.outcomes:
        raise UniverseFileError("at least one action and one outcome are required", b.last_line or 1, 1,
                                ['action', 'outcome'])

    try:
        universe = EventUniverse(tuple(b.events), tuple(b.order))
    except DecisionModelError as e:
        raise UniverseFileError(str(e), b.last_line, 1) from e

    gamma = None
    if b.gamma:
        try:
            gamma = OutcomeTable(tuple(b.actions), universe.names, tuple(b.outcomes), b.gamma)
        except DecisionModelError as e:
            raise UniverseFileError(str(e), b.last_line, 1) from e

    phi = DecisionMap(b.phi, default=b.default, associated_info=tuple(b.info))
    logger.debug(f"Parsed universe {name or '<text>'}: {len(b.events)} events, "
                 f"{len(b.actions)} actions, {len(b.outcomes)} outcomes, {len(b.phi)} phi entries")
    return DecisionProblem(universe, tuple(b.actions), tuple(b.outcomes), gamma, phi, name)


def load_universe(path) -> DecisionProblem:
    """Read a universe file from disk, or a bundled universe by name."""
    path = Path(path)
    if not path.exists():
        bundled = UNIVERSES_DIR / f"{path.name}.universe"
        if not bundled.exists():
            raise UniverseFileError(f"no such universe file: {path}", 1, 1)
        path = bundled
    return parse_universe(path.read_text(encoding="utf-8"), name=path.stem)


def bundled_universes() -> List[str]:
    return sorted(p.stem for p in UNIVERSES_DIR.glob("*.universe"))


def format_universe(problem: DecisionProblem) -> str:
    """Text form accepted by parse_universe."""
    lines = []
    for e in problem.universe.events:
        lines.append(f"event {e.name} occ={'T' if e.occurs else 'F'} img={'T' if e.imaginable else 'F'}")
    lines.extend(f"action {a}" for a in problem.actions)
    lines.extend(f"outcome {o}" for o in problem.outcomes)
    lines.extend(f"order {a} < {b}" for a, b in problem.universe.order)
    if problem.gamma is not None:
        lines.extend(f"gamma {a} {e} = {problem.gamma.outcome(a, e)}"
                     for a in problem.actions for e in problem.universe.names)
    lines.extend(f"phi {','.join(v)} = {a}" for v, a in problem.phi.table.items())
    if problem.phi.default is not None:
        lines.append(f"phi default = {problem.phi.default}")
    lines.extend(f"info {token}" for token in problem.phi.associated_info)
    return "\n".join(lines) + "\n"
