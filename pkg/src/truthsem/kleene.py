"""Strong Kleene three-valued algebra, evaluator and jump operator."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional

from .model import Theory, base_atom_value
from .syntax import And, Exists, Forall, Iff, Imp, Not, Or, PredApp, SAtom, TAtom


class TV(enum.IntEnum):
    """Three truth values.  The integer order ``| < ⊥ < ⊤`` is only the
    canonical listing order, not a semantic order."""

    UNDET = 0
    FALSE = 1
    TRUE = 2

    @property
    def symbol(self) -> str:
        return {TV.UNDET: "|", TV.FALSE: "⊥", TV.TRUE: "⊤"}[self]

    @property
    def letter(self) -> str:
        return {TV.UNDET: "U", TV.FALSE: "F", TV.TRUE: "T"}[self]

    @classmethod
    def of(cls, b: bool) -> "TV":
        return cls.TRUE if b else cls.FALSE

    @classmethod
    def parse(cls, text: str) -> "TV":
        for v in cls:
            if text in (v.symbol, v.letter, v.name):
                return v
        raise ValueError(f"not a truth value: {text!r}")

    @property
    def classical(self) -> bool:
        return self is not TV.UNDET

    def leq(self, other: "TV") -> bool:
        """Information order: ``|`` is below both classical values."""
        return self is TV.UNDET or self is other

    def compatible(self, other: "TV") -> bool:
        return self is TV.UNDET or other is TV.UNDET or self is other

    def join(self, other: "TV") -> "TV":
        if self is TV.UNDET:
            return other
        if other is TV.UNDET or other is self:
            return self
        raise ValueError("⊤ and ⊥ have no join")

    def __str__(self) -> str:
        return self.symbol


T_, F_, U_ = TV.TRUE, TV.FALSE, TV.UNDET

# rows: left operand, columns: right operand, both in the order ⊤ ⊥ |
_LAYOUT = (T_, F_, U_)
_PRINTED_TABLES = {
    "and": ((T_, F_, U_),
            (F_, F_, F_),
            (U_, F_, U_)),
    "or":  ((T_, T_, T_),
            (T_, F_, U_),
            (T_, U_, U_)),
    "imp": ((T_, F_, U_),
            (T_, T_, T_),
            (T_, U_, U_)),
    "iff": ((T_, F_, U_),
            (F_, T_, U_),
            (U_, U_, U_)),
}
NOT_TABLE = {T_: F_, F_: T_, U_: U_}

#: ``BINARY_TABLES[op][a][b]`` indexed by the integer values of TV
BINARY_TABLES: Dict[str, tuple] = {}
for _op, _rows in _PRINTED_TABLES.items():
    _t = [[U_] * 3 for _ in range(3)]
    for _i, _a in enumerate(_LAYOUT):
        for _j, _b in enumerate(_LAYOUT):
            _t[_a][_b] = _rows[_i][_j]
    BINARY_TABLES[_op] = tuple(tuple(r) for r in _t)

CONNECTIVES = ("not", "and", "or", "imp", "iff")
_NODE_OPS = {And: "and", Or: "or", Imp: "imp", Iff: "iff"}


def connective3(op: str, a: TV, b: Optional[TV] = None) -> TV:
    if op == "not":
        return NOT_TABLE[a]
    return BINARY_TABLES[op][a][b]


def forall3(values: Iterable[TV]) -> TV:
    result = TV.TRUE
    for v in values:
        if v is TV.FALSE:
            return TV.FALSE
        if v is TV.UNDET:
            result = TV.UNDET
    return result


def exists3(values: Iterable[TV]) -> TV:
    result = TV.FALSE
    for v in values:
        if v is TV.TRUE:
            return TV.TRUE
        if v is TV.UNDET:
            result = TV.UNDET
    return result


@dataclass(frozen=True)
class Hypothesis:
    """Three-valued assignment to the sentences named by T-atoms."""

    sentences: tuple
    values: tuple

    @classmethod
    def constant(cls, sentences, value: TV = TV.UNDET) -> "Hypothesis":
        sentences = tuple(sentences)
        return cls(sentences, (value,) * len(sentences))

    @classmethod
    def from_mapping(cls, sentences, mapping: Mapping) -> "Hypothesis":
        sentences = tuple(sentences)
        return cls(sentences, tuple(TV(mapping[s]) for s in sentences))

    def __getitem__(self, sentence) -> TV:
        return self.values[self._index()[sentence]]

    def __contains__(self, sentence) -> bool:
        return sentence in self._index()

    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {s: i for i, s in enumerate(self.sentences)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def as_dict(self) -> dict:
        return dict(zip(self.sentences, self.values))

    def leq(self, other: "Hypothesis") -> bool:
        return all(a.leq(b) for a, b in zip(self.values, other.values))

    def compatible(self, other: "Hypothesis") -> bool:
        return all(a.compatible(b) for a, b in zip(self.values, other.values))

    def join(self, other: "Hypothesis") -> "Hypothesis":
        return Hypothesis(self.sentences, tuple(a.join(b) for a, b in zip(self.values, other.values)))

    def determined(self) -> frozenset:
        return frozenset(s for s, v in zip(self.sentences, self.values) if v.classical)


def kleene_eval(s, h, th: Theory, g, memo: Optional[dict] = None) -> TV:
    """Strong Kleene value of the closure sentence ``s`` when T-atoms take ``h``'s values.

    ``h`` may be a Hypothesis or any mapping from named sentences to TV.
    """
    if memo is None:
        memo = {}
    hit = memo.get(s)
    if hit is not None:
        return hit
    if isinstance(s, TAtom):
        deps = g.edges[s]
        v = h[deps[0]] if deps else TV.FALSE
    elif isinstance(s, (PredApp, SAtom)):
        v = TV.of(base_atom_value(s, th))
    elif isinstance(s, Not):
        v = NOT_TABLE[kleene_eval(s.body, h, th, g, memo)]
    elif isinstance(s, Forall):
        v = forall3(kleene_eval(d, h, th, g, memo) for d in g.edges[s])
    elif isinstance(s, Exists):
        v = exists3(kleene_eval(d, h, th, g, memo) for d in g.edges[s])
    else:
        table = BINARY_TABLES[_NODE_OPS[type(s)]]
        v = table[kleene_eval(s.left, h, th, g, memo)][kleene_eval(s.right, h, th, g, memo)]
    memo[s] = v
    return v


def evaluate_all(h, th: Theory, g) -> dict:
    memo: dict = {}
    for s in g.nodes:
        kleene_eval(s, h, th, g, memo)
    return memo


def jump(h: Hypothesis, th: Theory, g) -> Hypothesis:
    memo: dict = {}
    return Hypothesis(g.t_core, tuple(kleene_eval(s, h, th, g, memo) for s in g.t_core))
