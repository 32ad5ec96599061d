"""Final two-valued semantics built on top of the primary valuation.

T-atoms are leaves here: ``T(t)`` is true exactly when ``t`` names a sentence
that is true in the primary semantics.  Everything else is classical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .fixpoint import FixpointReport, PrimaryValuation
from .kleene import TV
from .model import Theory, base_atom_value, t_target
from .syntax import And, Exists, Forall, Iff, Imp, Not, Or, PredApp, SAtom, TAtom, substitute


@dataclass(frozen=True, eq=False)
class FinalValuation:
    """Lazily evaluated, memoised final semantics.

    With ``extend`` set, T-atoms naming sentences outside the closure take the
    primary value those sentences are forced to have; otherwise such atoms
    raise OutsideClosure.  The memo is not locked; confine an instance to one
    thread.
    """

    source: PrimaryValuation
    extend: bool = False
    cache: Dict = field(default_factory=dict, repr=False)

    @property
    def theory(self) -> Theory:
        return self.source.theory

    def __call__(self, sentence) -> TV:
        return TV.of(self._eval(sentence))

    def _eval(self, s) -> bool:
        # only leaves and quantifiers are memoised; connectives are cheap and rarely shared
        if isinstance(s, (TAtom, PredApp, SAtom, Forall, Exists)):
            hit = self.cache.get(s)
            if hit is None:
                hit = self.cache[s] = self._leaf(s)
            return hit
        if isinstance(s, Not):
            return not self._eval(s.body)
        if isinstance(s, And):
            return self._eval(s.left) and self._eval(s.right)
        if isinstance(s, Or):
            return self._eval(s.left) or self._eval(s.right)
        if isinstance(s, Imp):
            return (not self._eval(s.left)) or self._eval(s.right)
        if isinstance(s, Iff):
            return self._eval(s.left) == self._eval(s.right)
        raise TypeError(f"not a sentence: {s!r}")

    def _leaf(self, s) -> bool:
        th = self.theory
        if isinstance(s, TAtom):
            target = t_target(s.arg, th)
            return target is not None and self.source.value_of(target, self.extend) is TV.TRUE
        if isinstance(s, (PredApp, SAtom)):
            return base_atom_value(s, th)
        names = (th.name_of(e) for e in self.source.graph.quantifier_range)
        instances = (self._eval(substitute(s.body, s.var, n)) for n in names)
        return all(instances) if isinstance(s, Forall) else any(instances)


def final_valuation(report: FixpointReport, extend: bool = False) -> FinalValuation:
    return FinalValuation(report.primary, extend)


def final_eval(s, f: FinalValuation, th: Optional[Theory] = None) -> TV:
    return f(s)


def verdict(s, report: FixpointReport, th: Optional[Theory] = None, extend: bool = False,
            final: Optional[FinalValuation] = None) -> Tuple[Optional[TV], TV]:
    """``(primary, final)`` for ``s``.

    Primary is None ("not computed") for sentences outside the closure unless
    ``extend`` is set.
    """
    f = final or FinalValuation(report.primary, extend)
    final_value = f(s)
    if s in report.primary:
        primary = report.primary[s]
    elif extend:
        primary = report.primary.value_of(s, extend=True)
    else:
        primary = None
    return primary, final_value
