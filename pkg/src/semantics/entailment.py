"""
Semantic entailment by exhaustive scan of finite models.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .models import Mode, ModelBlock, holds_block, model_blocks
from ..config.settings import AppConfig, get_config
from ..errors import SemanticsError, SizeCapExceeded
from ..logic.parser import print_formula
from ..logic.syntax import Formula, expand_defs, free_vars


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Counterexample:
    """A model satisfying every premise but not the conclusion."""
    n: int
    index: int
    model: str

    def to_dict(self) -> Dict:
        return {'n': self.n, 'index': self.index, 'model': self.model}

    @classmethod
    def from_dict(cls, data: Dict) -> 'Counterexample':
        return cls(data['n'], data['index'], data['model'])


@dataclass(frozen=True)
class SizeTally:
    n: int
    scanned: int
    premises_satisfied: int
    counterexamples: int

    def to_dict(self) -> Dict:
        return {'n': self.n, 'scanned': self.scanned,
                'premises_satisfied': self.premises_satisfied,
                'counterexamples': self.counterexamples}

    @classmethod
    def from_dict(cls, data: Dict) -> 'SizeTally':
        return cls(data['n'], data['scanned'], data['premises_satisfied'], data['counterexamples'])


@dataclass(frozen=True)
class EntailmentReport:
    """Result of scanning all models of sizes 1..max_n."""
    mode: Mode
    max_n: int
    premises: Tuple[str, ...]
    conclusion: str
    models_scanned: int = 0
    premises_satisfied: int = 0
    conclusion_satisfied: int = 0
    counterexample_count: int = 0
    counterexamples: Tuple[Counterexample, ...] = ()
    per_size: Tuple[SizeTally, ...] = field(default_factory=tuple)

    @property
    def entailed(self) -> bool:
        return self.counterexample_count == 0

    def to_dict(self) -> Dict:
        return {
            'mode': self.mode.value,
            'max_n': self.max_n,
            'premises': list(self.premises),
            'conclusion': self.conclusion,
            'models_scanned': self.models_scanned,
            'premises_satisfied': self.premises_satisfied,
            'conclusion_satisfied': self.conclusion_satisfied,
            'counterexample_count': self.counterexample_count,
            'counterexamples': [c.to_dict() for c in self.counterexamples],
            'per_size': [t.to_dict() for t in self.per_size],
            'entailed': self.entailed,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'EntailmentReport':
        return cls(
            mode=Mode(data['mode']),
            max_n=data['max_n'],
            premises=tuple(data['premises']),
            conclusion=data['conclusion'],
            models_scanned=data['models_scanned'],
            premises_satisfied=data['premises_satisfied'],
            conclusion_satisfied=data['conclusion_satisfied'],
            counterexample_count=data['counterexample_count'],
            counterexamples=tuple(Counterexample.from_dict(c) for c in data['counterexamples']),
            per_size=tuple(SizeTally.from_dict(t) for t in data['per_size']),
        )


def _all_hold(block: ModelBlock, formulas: Sequence[Formula]) -> np.ndarray:
    rows = np.ones(len(block), dtype=bool)
    for f in formulas:
        rows &= holds_block(block, f, {})
    return rows


class EntailmentChecker:
    """Scans finite models for counterexamples to premises |= conclusion."""

    def __init__(self, config: Optional[AppConfig] = None):
        self.config = config or get_config()

    def _closed(self, f: Formula, role: str) -> Formula:
        expanded = expand_defs(f)
        open_vars = free_vars(expanded)
        if open_vars:
            raise SemanticsError(f"{role} {print_formula(f)} is not closed "
                                 f"(free: {', '.join(sorted(open_vars))})")
        return expanded

    def check(self, premises: Sequence[Formula], conclusion: Formula, max_n: int,
              mode: Mode = Mode.ARBITRARY) -> EntailmentReport:
        cap = self.config.models.cap_for(mode is Mode.STRICT)
        if max_n > cap:
            raise SizeCapExceeded(f"max_n={max_n} exceeds the {mode.value} cap of {cap}")
        if max_n < 1:
            raise SemanticsError("max_n must be at least 1; the empty domain is not scanned")

        expanded = [self._closed(p, "premise") for p in premises]
        goal = self._closed(conclusion, "conclusion")
        keep = self.config.models.max_counterexamples

        scanned = satisfied = concluded = total_cex = 0
        kept: List[Counterexample] = []
        tallies: List[SizeTally] = []
        for n in range(1, max_n + 1):
            size_scanned = size_sat = size_cex = 0
            for block in model_blocks(n, mode, cap):
                premises_hold = _all_hold(block, expanded)
                refuted = premises_hold & ~holds_block(block, goal, {})
                block_sat = int(np.count_nonzero(premises_hold))
                block_cex = int(np.count_nonzero(refuted))
                size_scanned += len(block)
                size_sat += block_sat
                size_cex += block_cex
                concluded += block_sat - block_cex
                for row in np.flatnonzero(refuted)[:max(0, keep - len(kept))]:
                    kept.append(Counterexample(n, int(block.indices[row]), block.model(int(row)).to_text()))
            logger.info(f"n={n} ({mode.value}): {size_scanned} models, "
                        f"{size_sat} satisfy the premises, {size_cex} counterexamples")
            tallies.append(SizeTally(n, size_scanned, size_sat, size_cex))
            scanned += size_scanned
            satisfied += size_sat
            total_cex += size_cex

        return EntailmentReport(
            mode=mode,
            max_n=max_n,
            premises=tuple(print_formula(p) for p in premises),
            conclusion=print_formula(conclusion),
            models_scanned=scanned,
            premises_satisfied=satisfied,
            conclusion_satisfied=concluded,
            counterexample_count=total_cex,
            counterexamples=tuple(kept),
            per_size=tuple(tallies),
        )


def check_entailment(premises: Sequence[Formula], conclusion: Formula, max_n: int,
                     mode: Mode = Mode.ARBITRARY, config: Optional[AppConfig] = None) -> EntailmentReport:
    """Scan all models of sizes 1..max_n; the report lists every counterexample found (up to the cap)."""
    return EntailmentChecker(config).check(premises, conclusion, max_n, mode)


def satisfying_models(formulas: Sequence[Formula], max_n: int, mode: Mode = Mode.ARBITRARY,
                      config: Optional[AppConfig] = None):
    """Yield every model of size 1..max_n in which all formulas hold."""
    checker = EntailmentChecker(config)
    cap = checker.config.models.cap_for(mode is Mode.STRICT)
    expanded = [checker._closed(f, "formula") for f in formulas]
    for n in range(1, max_n + 1):
        for block in model_blocks(n, mode, cap):
            for row in np.flatnonzero(_all_hold(block, expanded)):
                yield block.model(int(row))
