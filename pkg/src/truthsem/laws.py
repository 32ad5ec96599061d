"""Catalogue of schemas that must come out true in the final semantics.

Each schema is instantiated over sentences of a theory's closure (pairs for
binary constructions, quantified sentences for the quantifier rows) and every
instance is evaluated with the final valuation.  Quantifier rows use the
quantified sentences of the closure plus a few probe formulas, instead of
quantifying over names of arbitrary sentences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, List, Optional, Sequence, Tuple

from .finalsem import FinalValuation
from .fixpoint import FixpointReport
from .kleene import TV
from .syntax import (
    And,
    Constant,
    Exists,
    Forall,
    Iff,
    Imp,
    Not,
    Or,
    PredApp,
    Quote,
    SAtom,
    SentenceConstant,
    TAtom,
    Variable,
    neg_name,
    pretty,
)

FAMILIES = ("consistency", "table", "iteration", "grounding", "description", "nonsentence", "baseatom")
DEFAULT_MAX_PAIRS = 400
_X = "x"


def T(t):
    return TAtom(t)


# F, U and D written out directly; arguments are already sugar-free

def F(t):
    return TAtom(neg_name(t))


def U(t):
    return And(Not(TAtom(t)), Not(F(t)))


def D(t):
    return Or(TAtom(t), F(t))


def q(phi):
    return Quote(phi)


def disj(*parts):
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


@dataclass(frozen=True)
class LawSchema:
    """``inputs`` says what the schema is instantiated over:
    ``sentence``, ``pair``, ``forall``, ``exists``, ``term``, ``atom`` or ``constant``."""

    name: str
    family: str
    inputs: str
    instantiate: Callable


@dataclass
class LawReport:
    schema: str
    instances: int = 0
    failures: List[Tuple[object, TV, TV]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _tbl(name, inputs, fn):
    return LawSchema(name, "table", inputs, fn)


SCHEMAS: Tuple[LawSchema, ...] = (
    LawSchema("consistency", "consistency", "sentence", lambda p: Not(And(T(q(p)), F(q(p))))),
    # negation
    _tbl("not-T", "sentence", lambda p: Iff(T(q(Not(p))), F(q(p)))),
    _tbl("not-F", "sentence", lambda p: Iff(F(q(Not(p))), T(q(p)))),
    _tbl("not-U", "sentence", lambda p: Iff(U(q(Not(p))), U(q(p)))),
    # conjunction
    _tbl("and-T", "pair", lambda p, r: Iff(T(q(And(p, r))), And(T(q(p)), T(q(r))))),
    _tbl("and-F", "pair", lambda p, r: Iff(F(q(And(p, r))), Or(F(q(p)), F(q(r))))),
    _tbl("and-U", "pair", lambda p, r: Iff(
        U(q(And(p, r))),
        disj(And(T(q(p)), U(q(r))), And(U(q(p)), T(q(r))), And(U(q(p)), U(q(r)))))),
    # disjunction
    _tbl("or-T", "pair", lambda p, r: Iff(T(q(Or(p, r))), Or(T(q(p)), T(q(r))))),
    _tbl("or-F", "pair", lambda p, r: Iff(F(q(Or(p, r))), And(F(q(p)), F(q(r))))),
    _tbl("or-U", "pair", lambda p, r: Iff(
        U(q(Or(p, r))),
        disj(And(F(q(p)), U(q(r))), And(U(q(p)), F(q(r))), And(U(q(p)), U(q(r)))))),
    # conditional
    _tbl("imp-T", "pair", lambda p, r: Iff(T(q(Imp(p, r))), Or(F(q(p)), T(q(r))))),
    _tbl("imp-F", "pair", lambda p, r: Iff(F(q(Imp(p, r))), And(T(q(p)), F(q(r))))),
    _tbl("imp-U", "pair", lambda p, r: Iff(
        U(q(Imp(p, r))),
        disj(And(T(q(p)), U(q(r))), And(U(q(p)), F(q(r))), And(U(q(p)), U(q(r)))))),
    # biconditional
    _tbl("iff-T", "pair", lambda p, r: Iff(
        T(q(Iff(p, r))), Or(And(T(q(p)), T(q(r))), And(F(q(p)), F(q(r)))))),
    _tbl("iff-F", "pair", lambda p, r: Iff(
        F(q(Iff(p, r))), Or(And(T(q(p)), F(q(r))), And(F(q(p)), T(q(r)))))),
    _tbl("iff-U", "pair", lambda p, r: Iff(U(q(Iff(p, r))), Or(U(q(p)), U(q(r))))),
    # universal quantifier; argument is a sentence  forall v. body
    _tbl("forall-T", "forall", lambda s: Iff(T(q(s)), Forall(s.var, T(q(s.body))))),
    _tbl("forall-F", "forall", lambda s: Iff(F(q(s)), Exists(s.var, F(q(s.body))))),
    _tbl("forall-U", "forall", lambda s: Iff(
        U(q(s)), And(Not(Exists(s.var, F(q(s.body)))), Exists(s.var, U(q(s.body)))))),
    # existential quantifier
    _tbl("exists-T", "exists", lambda s: Iff(T(q(s)), Exists(s.var, T(q(s.body))))),
    _tbl("exists-F", "exists", lambda s: Iff(F(q(s)), Forall(s.var, F(q(s.body))))),
    _tbl("exists-U", "exists", lambda s: Iff(
        U(q(s)), And(Not(Exists(s.var, T(q(s.body)))), Exists(s.var, U(q(s.body)))))),
    # iterated truth predicate
    LawSchema("iter-TT", "iteration", "sentence", lambda p: Iff(T(q(T(q(p)))), T(q(p)))),
    LawSchema("iter-FT", "iteration", "sentence", lambda p: Iff(F(q(T(q(p)))), F(q(p)))),
    LawSchema("iter-TF", "iteration", "sentence", lambda p: Iff(T(q(F(q(p)))), F(q(p)))),
    LawSchema("iter-FF", "iteration", "sentence", lambda p: Iff(F(q(F(q(p)))), T(q(p)))),
    LawSchema("iter-UT", "iteration", "sentence", lambda p: Iff(U(q(T(q(p)))), U(q(p)))),
    # names of non-sentences
    LawSchema("non-sentence", "nonsentence", "term", lambda t: And(Not(T(t)), Not(F(t)))),
    # atoms not built from T
    LawSchema("base-atom-T", "baseatom", "atom", lambda a: Iff(T(q(a)), a)),
    LawSchema("base-atom-F", "baseatom", "atom", lambda a: Iff(F(q(a)), Not(a))),
    # primary truth carries over to the final semantics
    LawSchema("grounding-T", "grounding", "sentence", lambda p: Imp(T(q(p)), p)),
    LawSchema("grounding-F", "grounding", "sentence", lambda p: Imp(F(q(p)), Not(p))),
    LawSchema("determinate-converse", "grounding", "sentence", lambda p: Imp(
        D(q(p)), And(Iff(T(q(p)), p), Iff(F(q(p)), Not(p))))),
    # sentence constants and the sentences they name
    LawSchema("description-T", "description", "constant",
              lambda c, d: Imp(T(SentenceConstant(c)), d)),
    LawSchema("description-F", "description", "constant",
              lambda c, d: Imp(F(SentenceConstant(c)), Not(d))),
)

SCHEMA_NAMES = tuple(s.name for s in SCHEMAS)


def schema(name: str) -> LawSchema:
    for s in SCHEMAS:
        if s.name == name:
            return s
    raise KeyError(name)


def _probe_bodies(th) -> list:
    x = Variable(_X)
    bodies = [T(x), F(x), U(x), D(x), And(SAtom(x), Not(T(x)))]
    for name, arity in th.signature.predicates.items():
        if arity == 1:
            bodies.append(PredApp(name, (x,)))
    return bodies


def _sample_pairs(nodes: Sequence, max_pairs: int) -> list:
    if len(nodes) ** 2 <= max_pairs:
        pool = list(nodes)
    else:
        k = max(1, int(max_pairs ** 0.5))
        step = len(nodes) / k
        pool = [nodes[int(i * step)] for i in range(k)]
    return list(product(pool, pool))


def schema_inputs(kind: str, report: FixpointReport, max_pairs: int = DEFAULT_MAX_PAIRS) -> list:
    th, g = report.theory, report.graph
    nodes = g.nodes
    if kind == "sentence":
        return [(s,) for s in nodes]
    if kind == "pair":
        return _sample_pairs(nodes, max_pairs)
    if kind in ("forall", "exists"):
        cls = Forall if kind == "forall" else Exists
        found = [s for s in nodes if isinstance(s, cls)]
        found += [cls(_X, b) for b in _probe_bodies(th)]
        return [(s,) for s in dict.fromkeys(found)]
    if kind == "term":
        return [(Constant(c),) for c in th.signature.constants]
    if kind == "atom":
        atoms = [s for s in nodes if isinstance(s, (PredApp, SAtom))]
        elems = [Constant(e) for e in th.base_domain]
        for name, arity in th.signature.predicates.items():
            for args in product(elems, repeat=arity):
                atoms.append(PredApp(name, tuple(args)))
                if len(atoms) > 500:
                    break
        atoms += [SAtom(e) for e in elems]
        atoms += [SAtom(Quote(s)) for s in nodes[:10]]
        return [(a,) for a in dict.fromkeys(atoms)]
    if kind == "constant":
        return [(c, th.constant_bindings[c]) for c in th.signature.sentence_constants]
    raise ValueError(f"unknown schema input kind {kind!r}")


def check_schema(
    sch: LawSchema,
    report: FixpointReport,
    th=None,
    final: Optional[FinalValuation] = None,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> LawReport:
    final = final or FinalValuation(report.primary, extend=True)
    out = LawReport(sch.name)
    for args in schema_inputs(sch.inputs, report, max_pairs):
        instance = sch.instantiate(*args)
        out.instances += 1
        got = final(instance)
        if got is not TV.TRUE:
            out.failures.append((instance, TV.TRUE, got))
    return out


def run_law_suite(report: FixpointReport, max_pairs: int = DEFAULT_MAX_PAIRS) -> List[LawReport]:
    final = FinalValuation(report.primary, extend=True)
    return [check_schema(s, report, final=final, max_pairs=max_pairs) for s in SCHEMAS]


def check_equivalence_transfer(phi1, phi2, report: FixpointReport, th=None) -> LawReport:
    """Do two sentences get the same T/F/U verdicts?  Diagnostic only."""
    final = FinalValuation(report.primary, extend=True)
    out = LawReport("equivalence-transfer")
    for pred in (T, F, U):
        instance = Iff(pred(q(phi1)), pred(q(phi2)))
        out.instances += 1
        got = final(instance)
        if got is not TV.TRUE:
            out.failures.append((instance, TV.TRUE, got))
    return out


def tarski_failures(report: FixpointReport) -> list:
    """Instances of ``T(name) <-> sentence`` that are false in the final semantics.

    Names are quotes of closure sentences and the sentence constants.
    """
    th = report.theory
    final = FinalValuation(report.primary, extend=True)
    candidates = [Iff(T(SentenceConstant(c)), th.constant_bindings[c]) for c in th.signature.sentence_constants]
    candidates += [Iff(T(q(s)), s) for s in report.graph.nodes]
    return [c for c in candidates if final(c) is TV.FALSE]


def format_failure(instance, expected: TV, got: TV) -> str:
    return f"{pretty(instance)}: expected {expected.symbol}, got {got.symbol}"
