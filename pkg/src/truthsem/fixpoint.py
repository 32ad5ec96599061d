"""Fixed points of the jump: least, all, intrinsic and the maximal intrinsic one.

The maximal intrinsic fixed point is found by exhaustive enumeration of
hypotheses over the T-core, filtering the intrinsic ones and joining them.
The join is then re-checked to be an intrinsic fixed point, which doubles as a
soundness check of the whole pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

import numpy as np

from .errors import EnumerationBudgetExceeded, InternalInvariantViolation, OutsideClosure
from .graph import DEFAULT_NODE_CAP, DepGraph, closure
from .kleene import (
    BINARY_TABLES,
    NOT_TABLE,
    TV,
    Hypothesis,
    evaluate_all,
    exists3,
    forall3,
    jump,
)
from .model import Theory, base_atom_value, t_target
from .program import compile_program, find_fixed_points
from .syntax import BINARY, And, Forall, Iff, Imp, Not, Or, PredApp, SAtom, TAtom, substitute

DEFAULT_BUDGET = 14
_OPS = {And: "and", Or: "or", Imp: "imp", Iff: "iff"}


def _hyp(core, row) -> Hypothesis:
    return Hypothesis(core, tuple(TV(int(v)) for v in row))


def _row(h: Hypothesis) -> np.ndarray:
    return np.array([int(v) for v in h.values], dtype=np.int8)


def least_fixed_point(th: Theory, g: DepGraph) -> Hypothesis:
    """Iterate the jump from the all-undetermined hypothesis until it stabilises."""
    h = Hypothesis.constant(g.t_core)
    for _ in range(len(g.t_core) + 2):
        nxt = jump(h, th, g)
        if nxt == h:
            return h
        if not h.leq(nxt):
            raise InternalInvariantViolation("jump iteration is not increasing")
        h = nxt
    raise InternalInvariantViolation("jump iteration did not stabilise")


def _check_budget(g: DepGraph, budget: int) -> None:
    if len(g.t_core) > budget:
        raise EnumerationBudgetExceeded(len(g.t_core), budget)


def fixed_point_array(th: Theory, g: DepGraph, budget: int = DEFAULT_BUDGET, backend=None) -> np.ndarray:
    _check_budget(g, budget)
    return find_fixed_points(compile_program(g, th), backend)


def enumerate_fixed_points(th: Theory, g: DepGraph, budget: int = DEFAULT_BUDGET) -> List[Hypothesis]:
    """Every fixed point of the jump, in canonical order."""
    return [_hyp(g.t_core, row) for row in fixed_point_array(th, g, budget)]


def is_intrinsic(h: Hypothesis, all_fixed) -> bool:
    """No sentence gets ⊤ from ``h`` and ⊥ from another fixed point, or vice versa."""
    return all(h.compatible(other) for other in all_fixed)


def intrinsic_mask(fixed: np.ndarray) -> np.ndarray:
    """Vectorised ``is_intrinsic`` for every row of a fixed-point array."""
    if fixed.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    some_true = (fixed == TV.TRUE).any(axis=0)
    some_false = (fixed == TV.FALSE).any(axis=0)
    clash = ((fixed == TV.TRUE) & some_false) | ((fixed == TV.FALSE) & some_true)
    return ~clash.any(axis=1)


def join_rows(rows: np.ndarray, width: int) -> np.ndarray:
    out = np.zeros(width, dtype=np.int8)
    for row in rows:
        for k, v in enumerate(row):
            if v != TV.UNDET:
                if out[k] not in (TV.UNDET, v):
                    raise InternalInvariantViolation("intrinsic fixed points conflict")
                out[k] = v
    return out


def maximal_points(points) -> list:
    """The ⊑-maximal members of a list of hypotheses."""
    return [
        h for h in points
        if not any(h != other and h.leq(other) for other in points)
    ]


@dataclass(frozen=True, eq=False)
class PrimaryValuation:
    """Three-valued primary semantics on the closure.

    ``value_of`` also serves sentences outside the closure: their values are
    forced by the closure values (any cycle runs through a constant binding,
    and every binding is in the closure), so they are computed by recursion.
    """

    values: Mapping
    theory: Theory
    graph: DepGraph
    _extra: Dict = field(default_factory=dict, repr=False)

    @property
    def determination_domain(self) -> frozenset:
        return frozenset(s for s, v in self.values.items() if v.classical)

    def __getitem__(self, sentence) -> TV:
        return self.values[sentence]

    def __contains__(self, sentence) -> bool:
        return sentence in self.values

    def value_of(self, sentence, extend: bool = False) -> TV:
        v = self.values.get(sentence)
        if v is not None:
            return v
        if not extend:
            raise OutsideClosure(sentence)
        return self._grounded(sentence, set())

    def _grounded(self, s, active) -> TV:
        v = self.values.get(s)
        if v is None:
            v = self._extra.get(s)
        if v is not None:
            return v
        if s in active:
            raise InternalInvariantViolation("cycle among sentences outside the closure")
        active.add(s)
        th, qrange = self.theory, self.graph.quantifier_range
        if isinstance(s, TAtom):
            target = t_target(s.arg, th)
            v = TV.FALSE if target is None else self._grounded(target, active)
        elif isinstance(s, (PredApp, SAtom)):
            v = TV.of(base_atom_value(s, th))
        elif isinstance(s, Not):
            v = NOT_TABLE[self._grounded(s.body, active)]
        elif isinstance(s, BINARY):
            v = BINARY_TABLES[_OPS[type(s)]][self._grounded(s.left, active)][self._grounded(s.right, active)]
        else:
            instances = (self._grounded(substitute(s.body, s.var, th.name_of(e)), active) for e in qrange)
            v = forall3(instances) if isinstance(s, Forall) else exists3(instances)
        active.discard(s)
        self._extra[s] = v
        return v


@dataclass(frozen=True)
class ClassicalPartial:
    values: Mapping

    @property
    def domain(self) -> frozenset:
        return frozenset(self.values)

    def __getitem__(self, sentence) -> bool:
        return self.values[sentence]


def classical_restriction(p: PrimaryValuation) -> ClassicalPartial:
    return ClassicalPartial({s: v is TV.TRUE for s, v in p.values.items() if v.classical})


@dataclass(frozen=True, eq=False)
class FixpointReport:
    theory: Theory
    graph: DepGraph
    least: Hypothesis
    maximal_intrinsic: Hypothesis
    primary: PrimaryValuation
    fixed: Optional[np.ndarray] = None
    intrinsic_flags: Optional[np.ndarray] = None
    complete: bool = True

    @property
    def core(self) -> tuple:
        return self.graph.t_core

    @property
    def all_fixed(self) -> List[Hypothesis]:
        if self.fixed is None:
            return []
        return [_hyp(self.core, r) for r in self.fixed]

    @property
    def intrinsic(self) -> List[Hypothesis]:
        if self.fixed is None:
            return []
        return [_hyp(self.core, r) for r in self.fixed[self.intrinsic_flags]]

    @property
    def n_fixed(self) -> int:
        return 0 if self.fixed is None else int(self.fixed.shape[0])

    @property
    def n_intrinsic(self) -> int:
        return 0 if self.fixed is None else int(self.intrinsic_flags.sum())

    def classical(self) -> ClassicalPartial:
        return classical_restriction(self.primary)


def _primary(th: Theory, g: DepGraph, h: Hypothesis) -> PrimaryValuation:
    return PrimaryValuation(evaluate_all(h, th, g), th, g)


def maximal_intrinsic(th: Theory, g: DepGraph, budget: int = DEFAULT_BUDGET, backend=None) -> FixpointReport:
    fixed = fixed_point_array(th, g, budget, backend)
    flags = intrinsic_mask(fixed)
    core = g.t_core
    top = _hyp(core, join_rows(fixed[flags], len(core)))
    if jump(top, th, g) != top:
        raise InternalInvariantViolation("join of intrinsic fixed points is not a fixed point")
    if not any((row == _row(top)).all() for row in fixed[flags]):
        raise InternalInvariantViolation("join of intrinsic fixed points is not intrinsic")
    least = least_fixed_point(th, g)
    if not least.leq(top):
        raise InternalInvariantViolation("least fixed point is not below the maximal intrinsic one")
    primary = _primary(th, g, top)
    for t_atom, target in g.t_edges():
        if primary[t_atom] != primary[target]:
            raise InternalInvariantViolation("fixed-point condition fails on the closure")
    return FixpointReport(th, g, least, top, primary, fixed, flags)


def least_only_report(th: Theory, g: DepGraph) -> FixpointReport:
    """Fallback when enumeration is over budget; flagged incomplete."""
    least = least_fixed_point(th, g)
    return FixpointReport(th, g, least, least, _primary(th, g, least), complete=False)


def analyze(
    th: Theory,
    seeds=(),
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_NODE_CAP,
    allow_incomplete: bool = False,
    backend=None,
) -> FixpointReport:
    """Closure plus fixed-point report for ``th``."""
    g = closure(seeds, th, cap)
    try:
        return maximal_intrinsic(th, g, budget, backend)
    except EnumerationBudgetExceeded:
        if not allow_incomplete:
            raise
        return least_only_report(th, g)
