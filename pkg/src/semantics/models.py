"""
Finite structures over the Black Swan signature, Tarskian evaluation and
exhaustive model enumeration.

A model of size n has domain {0..n-1} and interprets lt, occ and img. Models
are numbered by an index whose low n*n bits are the lt table in row-major
order, followed by n occ bits and n img bits.
"""

import re
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import numpy as np

from ..config.settings import get_config
from ..errors import ParseError, SemanticsError, SizeCapExceeded, UnboundVariable
from ..logic.syntax import (
    And, Exists, Forall, Formula, Implies, Not, Or, Pred, Term, Var, expand_defs,
)


logger = logging.getLogger(__name__)

Environment = Mapping[str, int]


class Mode(Enum):
    """Which lt relations an enumeration admits."""
    ARBITRARY = "arbitrary"
    STRICT = "strict"

    @classmethod
    def parse(cls, text: str) -> 'Mode':
        aliases = {'strict-order': cls.STRICT}
        if text in aliases:
            return aliases[text]
        return cls(text)


def _bits(value: int, width: int) -> Tuple[bool, ...]:
    return tuple(bool(b) for b in (value >> np.arange(width, dtype=np.int64)) & 1)


def _pack(bits) -> int:
    return sum(1 << k for k, b in enumerate(bits) if b)


@dataclass(frozen=True)
class FiniteModel:
    """Finite interpretation of lt/2, occ/1, img/1 (and optional constants)."""
    n: int
    lt: Tuple[Tuple[bool, ...], ...]
    occ: Tuple[bool, ...]
    img: Tuple[bool, ...]
    constants: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise SemanticsError("Model size must be non-negative")
        if len(self.lt) != self.n or any(len(row) != self.n for row in self.lt):
            raise SemanticsError(f"lt table must be {self.n}x{self.n}")
        if len(self.occ) != self.n or len(self.img) != self.n:
            raise SemanticsError(f"occ and img tables must have {self.n} entries")
        for name, value in self.constants:
            if not 0 <= value < self.n:
                raise SemanticsError(f"Constant {name} interpreted outside the domain")

    @classmethod
    def from_index(cls, n: int, index: int) -> 'FiniteModel':
        bits = _bits(index, n * n + 2 * n)
        lt = tuple(tuple(bits[i * n:(i + 1) * n]) for i in range(n))
        return cls(n, lt, bits[n * n:n * n + n], bits[n * n + n:])

    @classmethod
    def from_sets(cls, n: int, lt=(), occ=(), img=(), constants: Optional[Dict[str, int]] = None) -> 'FiniteModel':
        """Build a model from pair and element sets, e.g. lt={(0, 1)}, occ={0}."""
        pairs = set(lt)
        table = tuple(tuple((i, j) in pairs for j in range(n)) for i in range(n))
        return cls(n, table,
                   tuple(i in set(occ) for i in range(n)),
                   tuple(i in set(img) for i in range(n)),
                   tuple(sorted((constants or {}).items())))

    @property
    def index(self) -> int:
        return _pack([b for row in self.lt for b in row] + list(self.occ) + list(self.img))

    @property
    def lt_matrix(self) -> np.ndarray:
        return np.array(self.lt, dtype=bool).reshape(self.n, self.n)

    def lt_pairs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(self.n) if self.lt[i][j]]

    def to_text(self) -> str:
        lt = ",".join(f"({i},{j})" for i, j in self.lt_pairs())
        occ = ",".join(str(i) for i in range(self.n) if self.occ[i])
        img = ",".join(str(i) for i in range(self.n) if self.img[i])
        text = f"n={self.n}; lt={{{lt}}}; occ={{{occ}}}; img={{{img}}}"
        for name, value in self.constants:
            text += f"; {name}={value}"
        return text

    def __str__(self):
        return self.to_text()


MODEL_RE = re.compile(
    r'\s*n\s*=\s*(\d+)\s*;\s*lt\s*=\s*\{([^}]*)\}\s*;\s*occ\s*=\s*\{([^}]*)\}'
    r'\s*;\s*img\s*=\s*\{([^}]*)\}((?:\s*;\s*[a-z][A-Za-z0-9_]*\s*=\s*\d+)*)\s*\Z'
)
PAIR_RE = re.compile(r'\(\s*(\d+)\s*,\s*(\d+)\s*\)')


def parse_model_text(text: str) -> FiniteModel:
    """Inverse of FiniteModel.to_text."""
    match = MODEL_RE.match(text)
    if not match:
        raise ParseError("expected 'n=<k>; lt={...}; occ={...}; img={...}'", 1, 1)
    n = int(match.group(1))
    pairs = [(int(a), int(b)) for a, b in PAIR_RE.findall(match.group(2))]
    occ = [int(v) for v in match.group(3).split(',') if v.strip()]
    img = [int(v) for v in match.group(4).split(',') if v.strip()]
    constants = {}
    for item in filter(None, (s.strip() for s in match.group(5).split(';'))):
        name, value = (s.strip() for s in item.split('='))
        constants[name] = int(value)
    if any(not (0 <= v < n) for pair in pairs for v in pair) or any(not (0 <= v < n) for v in occ + img):
        raise ParseError(f"element outside domain 0..{n - 1}", 1, 1)
    return FiniteModel.from_sets(n, pairs, occ, img, constants)


# ---------------------------------------------------------------------------
# Evaluation

def eval_term(m: FiniteModel, t: Term, env: Environment) -> int:
    if isinstance(t, Var):
        if t.name not in env:
            raise UnboundVariable(f"Variable {t.name} is not bound in the environment")
        return env[t.name]
    interpretation = dict(m.constants)
    if t.name not in interpretation:
        raise UnboundVariable(f"Constant {t.name} has no interpretation in the model")
    return interpretation[t.name]


def holds(m: FiniteModel, f: Formula, env: Environment) -> bool:
    """Truth of an abbreviation-free formula; quantifiers range over 0..n-1."""
    if isinstance(f, Pred):
        args = [eval_term(m, a, env) for a in f.args]
        if f.name == 'lt':
            return m.lt[args[0]][args[1]]
        if f.name == 'occ':
            return m.occ[args[0]]
        if f.name == 'img':
            return m.img[args[0]]
        raise SemanticsError(f"Predicate {f.name} is not interpreted by finite models")
    if isinstance(f, Not):
        return not holds(m, f.body, env)
    if isinstance(f, And):
        return holds(m, f.left, env) and holds(m, f.right, env)
    if isinstance(f, Or):
        return holds(m, f.left, env) or holds(m, f.right, env)
    if isinstance(f, Implies):
        return (not holds(m, f.left, env)) or holds(m, f.right, env)
    if isinstance(f, Forall):
        return all(holds(m, f.body, {**env, f.var: d}) for d in range(m.n))
    if isinstance(f, Exists):
        return any(holds(m, f.body, {**env, f.var: d}) for d in range(m.n))
    raise SemanticsError(f"Cannot evaluate {f!r}")


def evaluate(m: FiniteModel, f: Formula, env: Optional[Environment] = None) -> bool:
    """Evaluate f in m under env, expanding abbreviations first."""
    return holds(m, expand_defs(f), dict(env or {}))


def is_strict_order(m: FiniteModel) -> bool:
    """True iff lt is irreflexive and transitive."""
    return is_strict_relation(m.lt_matrix)


def is_strict_relation(lt: np.ndarray) -> bool:
    """Irreflexivity and transitivity of a boolean adjacency matrix."""
    if lt.size == 0:
        return True
    if lt.diagonal().any():
        return False
    composed = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
    return not np.any(composed & ~lt)


# ---------------------------------------------------------------------------
# Enumeration

def strict_order_codes(n: int) -> List[int]:
    """lt-table codes (low n*n index bits) of every strict order on n elements, ascending."""
    # Strict orders are asymmetric: each unordered pair is unrelated, i<j or j<i.
    pairs = list(combinations(range(n), 2))
    codes = []
    for choice in product(range(3), repeat=len(pairs)):
        lt = np.zeros((n, n), dtype=bool)
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                lt[i, j] = True
            elif c == 2:
                lt[j, i] = True
        if is_strict_relation(lt):
            codes.append(_pack(lt.ravel()))
    return sorted(codes)


def count_models(n: int, mode: Mode) -> int:
    flags = 1 << (2 * n)
    if mode is Mode.ARBITRARY:
        return (1 << (n * n)) * flags
    return len(strict_order_codes(n)) * flags


BLOCK_SIZE = 1 << 16


@dataclass(frozen=True, eq=False)
class ModelBlock:
    """A run of consecutive models of one size, held as numpy tables.

    indices[k] is the model index of row k; lt is (rows, n, n), occ and img
    are (rows, n).
    """
    n: int
    indices: np.ndarray
    lt: np.ndarray
    occ: np.ndarray
    img: np.ndarray

    def __len__(self) -> int:
        return len(self.indices)

    def model(self, row: int) -> FiniteModel:
        return FiniteModel(
            self.n,
            tuple(tuple(r) for r in self.lt[row].tolist()),
            tuple(self.occ[row].tolist()),
            tuple(self.img[row].tolist()),
        )


def _block(n: int, indices: np.ndarray) -> ModelBlock:
    width = n * n + 2 * n
    bits = ((indices[:, None] >> np.arange(width, dtype=np.int64)) & 1).astype(bool)
    return ModelBlock(
        n=n,
        indices=indices,
        lt=bits[:, :n * n].reshape(len(indices), n, n),
        occ=bits[:, n * n:n * n + n],
        img=bits[:, n * n + n:],
    )


def model_blocks(n: int, mode: Mode = Mode.ARBITRARY, cap: Optional[int] = None,
                 block_size: int = BLOCK_SIZE) -> Iterator[ModelBlock]:
    """Every model of size exactly n, in ascending index order, block by block."""
    if n < 0:
        raise SemanticsError("Model size must be non-negative")
    if cap is None:
        cap = get_config().models.cap_for(mode is Mode.STRICT)
    if n > cap:
        raise SizeCapExceeded(f"Size {n} exceeds the {mode.value} cap of {cap}")

    if mode is Mode.ARBITRARY:
        total = count_models(n, mode)
        for start in range(0, total, block_size):
            yield _block(n, np.arange(start, min(start + block_size, total), dtype=np.int64))
        return

    # The flag bits sit above the lt bits, so lt varies fastest.
    codes = np.array(strict_order_codes(n), dtype=np.int64)
    flags_per_block = max(1, block_size // len(codes))
    flag_count = 1 << (2 * n)
    for start in range(0, flag_count, flags_per_block):
        flags = np.arange(start, min(start + flags_per_block, flag_count), dtype=np.int64)
        yield _block(n, ((flags[:, None] << (n * n)) | codes[None, :]).ravel())


def enumerate_models(n: int, mode: Mode = Mode.ARBITRARY, cap: Optional[int] = None) -> Iterator[FiniteModel]:
    """Yield every model of size exactly n once, in ascending index order."""
    for block in model_blocks(n, mode, cap):
        for row in range(len(block)):
            yield block.model(row)


def _block_term(t: Term, env: Environment) -> int:
    if isinstance(t, Var):
        if t.name not in env:
            raise UnboundVariable(f"Variable {t.name} is not bound in the environment")
        return env[t.name]
    raise UnboundVariable(f"Constant {t.name} has no interpretation in enumerated models")


def holds_block(block: ModelBlock, f: Formula, env: Environment) -> np.ndarray:
    """Truth of an abbreviation-free formula in every model of the block at once."""
    if isinstance(f, Pred):
        args = [_block_term(a, env) for a in f.args]
        if f.name == 'lt':
            return block.lt[:, args[0], args[1]]
        if f.name == 'occ':
            return block.occ[:, args[0]]
        if f.name == 'img':
            return block.img[:, args[0]]
        raise SemanticsError(f"Predicate {f.name} is not interpreted by finite models")
    if isinstance(f, Not):
        return ~holds_block(block, f.body, env)
    if isinstance(f, And):
        return holds_block(block, f.left, env) & holds_block(block, f.right, env)
    if isinstance(f, Or):
        return holds_block(block, f.left, env) | holds_block(block, f.right, env)
    if isinstance(f, Implies):
        return ~holds_block(block, f.left, env) | holds_block(block, f.right, env)
    if isinstance(f, Forall):
        result = np.ones(len(block), dtype=bool)
        for d in range(block.n):
            result &= holds_block(block, f.body, {**env, f.var: d})
            if not result.any():
                break
        return result
    if isinstance(f, Exists):
        result = np.zeros(len(block), dtype=bool)
        for d in range(block.n):
            result |= holds_block(block, f.body, {**env, f.var: d})
            if result.all():
                break
        return result
    raise SemanticsError(f"Cannot evaluate {f!r}")
