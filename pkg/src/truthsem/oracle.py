"""Brute-force reference semantics for cross-checking the solver.

Deliberately naive and kept apart from the solver: its own sentence
collection, its own rule-based three-valued evaluator without memoisation,
and hypotheses over every T-atom of the closure rather than over the named
sentences.  Only syntax utilities and term denotation are shared.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List

from .errors import TruthsemError
from .model import Base, Sent, base_atom_value, t_target
from .syntax import And, Exists, Forall, Iff, Imp, Not, Or, PredApp, SAtom, TAtom, substitute

TOP, BOT, UND = "T", "F", "U"
ORACLE_MAX_T_ATOMS = 10


class OracleBudgetExceeded(TruthsemError):
    pass


@dataclass
class OracleVerdict:
    sentences: list                 # every collected sentence
    core: frozenset                 # sentences named by T-atoms
    fixed_points: List[Dict]        # full valuations
    intrinsic: List[Dict]
    maximal: Dict                   # maximal intrinsic valuation on all sentences
    final: Dict                     # final truth (bool) of every sentence

    @property
    def n_fixed(self) -> int:
        return len(self.fixed_points)

    @property
    def n_intrinsic(self) -> int:
        return len(self.intrinsic)

    def core_projection(self) -> set:
        return {frozenset((s, v[s]) for s in self.core) for v in self.fixed_points}


def _children(s, th, domain):
    if isinstance(s, Not):
        return [s.body]
    if isinstance(s, (And, Or, Imp, Iff)):
        return [s.left, s.right]
    if isinstance(s, (Forall, Exists)):
        return [substitute(s.body, s.var, th.name_of(e)) for e in domain]
    if isinstance(s, TAtom):
        target = t_target(s.arg, th)
        return [] if target is None else [target]
    return []


def _collect(start, th, domain) -> list:
    seen: list = []
    known = set()
    todo = list(start)
    while todo:
        s = todo.pop(0)
        if s in known:
            continue
        known.add(s)
        seen.append(s)
        todo.extend(_children(s, th, domain))
    return seen


def oracle_domain(th) -> list:
    base = [Base(a) for a in th.base_domain]
    registered = _collect([th.constant_bindings[c] for c in th.signature.sentence_constants], th, base)
    return base + [Sent(s) for s in registered]


# three-valued rules, stated condition by condition

def _neg(a):
    if a == TOP:
        return BOT
    if a == BOT:
        return TOP
    return UND


def _conj(a, b):
    if a == TOP and b == TOP:
        return TOP
    if a == BOT or b == BOT:
        return BOT
    return UND


def _disj(a, b):
    if a == TOP or b == TOP:
        return TOP
    if a == BOT and b == BOT:
        return BOT
    return UND


def _cond(a, b):
    if a == BOT or b == TOP:
        return TOP
    if a == TOP and b == BOT:
        return BOT
    return UND


def _bicond(a, b):
    if UND in (a, b):
        return UND
    return TOP if a == b else BOT


def _naive(s, assignment, th, domain):
    if isinstance(s, TAtom):
        return assignment[s]
    if isinstance(s, (PredApp, SAtom)):
        return TOP if base_atom_value(s, th) else BOT
    if isinstance(s, Not):
        return _neg(_naive(s.body, assignment, th, domain))
    if isinstance(s, (And, Or, Imp, Iff)):
        a = _naive(s.left, assignment, th, domain)
        b = _naive(s.right, assignment, th, domain)
        return {And: _conj, Or: _disj, Imp: _cond, Iff: _bicond}[type(s)](a, b)
    values = [_naive(substitute(s.body, s.var, th.name_of(e)), assignment, th, domain) for e in domain]
    if isinstance(s, Forall):
        if all(v == TOP for v in values):
            return TOP
        return BOT if BOT in values else UND
    if any(v == TOP for v in values):
        return TOP
    return BOT if all(v == BOT for v in values) else UND


def _final(s, maximal, th, domain) -> bool:
    if isinstance(s, TAtom):
        target = t_target(s.arg, th)
        return target is not None and maximal[target] == TOP
    if isinstance(s, (PredApp, SAtom)):
        return base_atom_value(s, th)
    if isinstance(s, Not):
        return not _final(s.body, maximal, th, domain)
    if isinstance(s, And):
        return _final(s.left, maximal, th, domain) and _final(s.right, maximal, th, domain)
    if isinstance(s, Or):
        return _final(s.left, maximal, th, domain) or _final(s.right, maximal, th, domain)
    if isinstance(s, Imp):
        return (not _final(s.left, maximal, th, domain)) or _final(s.right, maximal, th, domain)
    if isinstance(s, Iff):
        return _final(s.left, maximal, th, domain) == _final(s.right, maximal, th, domain)
    values = [_final(substitute(s.body, s.var, th.name_of(e)), maximal, th, domain) for e in domain]
    return all(values) if isinstance(s, Forall) else any(values)


def oracle_report(th, seeds=(), max_t_atoms: int = ORACLE_MAX_T_ATOMS) -> OracleVerdict:
    domain = oracle_domain(th)
    bindings = [th.constant_bindings[c] for c in th.signature.sentence_constants]
    sentences = _collect(bindings + list(seeds), th, domain)
    t_atoms = [s for s in sentences if isinstance(s, TAtom)]
    if len(t_atoms) > max_t_atoms:
        raise OracleBudgetExceeded(f"{len(t_atoms)} T-atoms exceed the oracle budget of {max_t_atoms}")
    targets = {t: t_target(t.arg, th) for t in t_atoms}
    core = frozenset(v for v in targets.values() if v is not None)

    fixed = []
    for combo in product((UND, BOT, TOP), repeat=len(t_atoms)):
        assignment = dict(zip(t_atoms, combo))
        valuation = {s: _naive(s, assignment, th, domain) for s in sentences}
        if all(
            valuation[t] == (BOT if targets[t] is None else valuation[targets[t]])
            for t in t_atoms
        ):
            fixed.append(valuation)

    def clashes(v, w):
        return any({v[s], w[s]} == {TOP, BOT} for s in sentences)

    intrinsic = [v for v in fixed if not any(clashes(v, w) for w in fixed)]
    determined = [frozenset(s for s in sentences if v[s] != UND) for v in intrinsic]
    maximal = [v for v, dd in zip(intrinsic, determined) if all(other <= dd for other in determined)]
    if len(maximal) != 1:
        raise TruthsemError(f"oracle found {len(maximal)} maximal intrinsic valuations")
    top = maximal[0]
    final = {s: _final(s, top, th, domain) for s in sentences}
    return OracleVerdict(sentences, core, fixed, intrinsic, top, final)


def classical_eval(s, th, domain=None) -> bool:
    """Plain two-valued evaluation of a sentence without T-atoms."""
    if domain is None:
        domain = [Base(a) for a in th.base_domain]
    if isinstance(s, TAtom):
        raise ValueError("classical_eval handles T-free sentences only")
    if isinstance(s, (PredApp, SAtom)):
        return base_atom_value(s, th)
    if isinstance(s, Not):
        return not classical_eval(s.body, th, domain)
    if isinstance(s, (And, Or, Imp, Iff)):
        a, b = classical_eval(s.left, th, domain), classical_eval(s.right, th, domain)
        return {And: a and b, Or: a or b, Imp: (not a) or b, Iff: a == b}[type(s)]
    values = [classical_eval(substitute(s.body, s.var, th.name_of(e)), th, domain) for e in domain]
    return all(values) if isinstance(s, Forall) else any(values)
