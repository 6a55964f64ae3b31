"""
Bundled proof corpus and its self-check.
"""

import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .checker import check_proof
from .mutations import generate_mutations
from .script import ProofScript, parse_script
from ..errors import KernelError


logger = logging.getLogger(__name__)

CORPUS_DIR = Path(__file__).parent / "corpus"
GOLDEN_PROOF = "blackswan-thm-73"


def corpus_names() -> List[str]:
    return sorted(p.stem for p in CORPUS_DIR.glob("*.proof"))


def load_corpus_entry(name: str) -> ProofScript:
    path = CORPUS_DIR / f"{name}.proof"
    if not path.exists():
        raise KernelError(f"No bundled proof named {name!r} (available: {', '.join(corpus_names())})")
    return parse_script(path.read_text(encoding="utf-8"), name=name)


def list_corpus() -> List[Tuple[str, ProofScript]]:
    """All bundled proofs as (name, script), sorted by name."""
    return [(name, load_corpus_entry(name)) for name in corpus_names()]


@dataclass(frozen=True)
class CorpusEntryResult:
    name: str
    theory: str
    goal: str
    accepted: bool
    lines_ok: int
    lines_total: int

    def to_dict(self) -> Dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict) -> 'CorpusEntryResult':
        return cls(**data)


@dataclass(frozen=True)
class CorpusReport:
    """Corpus re-check, optionally with a mutation run over the golden proof."""
    entries: Tuple[CorpusEntryResult, ...] = field(default_factory=tuple)
    mutations_run: int = 0
    mutations_rejected: int = 0
    mutation_seed: Optional[int] = None
    false_accepts: Tuple[str, ...] = ()
    early_failures: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return (all(e.accepted for e in self.entries)
                and not self.false_accepts and not self.early_failures)

    def to_dict(self) -> Dict:
        return {
            'entries': [e.to_dict() for e in self.entries],
            'mutations_run': self.mutations_run,
            'mutations_rejected': self.mutations_rejected,
            'mutation_seed': self.mutation_seed,
            'false_accepts': list(self.false_accepts),
            'early_failures': list(self.early_failures),
            'ok': self.ok,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'CorpusReport':
        return cls(
            entries=tuple(CorpusEntryResult.from_dict(e) for e in data['entries']),
            mutations_run=data['mutations_run'],
            mutations_rejected=data['mutations_rejected'],
            mutation_seed=data.get('mutation_seed'),
            false_accepts=tuple(data.get('false_accepts', ())),
            early_failures=tuple(data.get('early_failures', ())),
        )


def check_corpus(mutations: int = 0, seed: Optional[int] = None) -> CorpusReport:
    """Re-check every bundled proof; with mutations > 0 also run the mutation suite."""
    entries = []
    golden: Optional[ProofScript] = None
    for name, script in list_corpus():
        report = check_proof(script)
        entries.append(CorpusEntryResult(name, report.theory, script.goal, report.accepted,
                                         report.lines_ok, len(report.lines)))
        if not report.accepted:
            logger.error(f"Bundled proof {name} rejected at line {report.first_failure}")
        if name == GOLDEN_PROOF:
            golden = script

    false_accepts: List[str] = []
    early: List[str] = []
    rejected = 0
    if mutations > 0:
        if golden is None:
            raise KernelError(f"Golden proof {GOLDEN_PROOF} is missing from the corpus")
        for mutation in generate_mutations(golden, mutations, seed or 0):
            report = check_proof(mutation.script)
            if report.accepted:
                false_accepts.append(mutation.description)
                logger.error(f"Mutation accepted: {mutation.description}")
                continue
            rejected += 1
            failure = report.first_failure
            if failure is not None and failure < mutation.line:
                early.append(f"{mutation.description} (failed at line {failure})")
        logger.info(f"Mutation suite: {rejected}/{mutations} rejected")

    return CorpusReport(tuple(entries), mutations, rejected, seed if mutations else None,
                        tuple(false_accepts), tuple(early))
