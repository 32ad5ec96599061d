"""Randomised invariants of the solver."""

import functools

from hypothesis import HealthCheck, assume, given, settings, strategies as st

from tests.conftest import random_corpus
from truthsem.finalsem import FinalValuation
from truthsem.fixpoint import analyze, maximal_points
from truthsem.graph import closure
from truthsem.kleene import TV, Hypothesis, jump, kleene_eval
from truthsem.model import Signature, Theory
from truthsem.oracle import classical_eval, oracle_domain
from truthsem.syntax import (
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
)

CORPUS = random_corpus()
TVS = st.sampled_from(list(TV))


@functools.lru_cache(maxsize=None)
def report(i):
    return analyze(CORPUS[i])


@functools.lru_cache(maxsize=None)
def graph(i):
    return closure((), CORPUS[i])


@st.composite
def ordered_pair(draw):
    i = draw(st.integers(0, len(CORPUS) - 1))
    core = graph(i).t_core
    upper = draw(st.lists(TVS, min_size=len(core), max_size=len(core)))
    keep = draw(st.lists(st.booleans(), min_size=len(core), max_size=len(core)))
    lower = [v if k else TV.UNDET for v, k in zip(upper, keep)]
    return i, Hypothesis(core, tuple(lower)), Hypothesis(core, tuple(upper))


@settings(max_examples=1200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(ordered_pair())
def test_jump_is_monotone(case):
    i, lo, hi = case
    th, g = CORPUS[i], graph(i)
    assert lo.leq(hi)
    assert jump(lo, th, g).leq(jump(hi, th, g))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, len(CORPUS) - 1))
def test_least_below_maximal_intrinsic(i):
    rep = report(i)
    assert rep.least.leq(rep.maximal_intrinsic)
    for h in rep.all_fixed:
        assert rep.least.leq(h)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, len(CORPUS) - 1))
def test_unique_maximal_intrinsic_is_the_join(i):
    rep = report(i)
    intrinsic = rep.intrinsic
    assert maximal_points(intrinsic) == [rep.maximal_intrinsic]
    joined = intrinsic[0]
    for h in intrinsic[1:]:
        joined = joined.join(h)
    assert joined == rep.maximal_intrinsic


@settings(max_examples=100, deadline=None)
@given(st.integers(0, len(CORPUS) - 1))
def test_final_extends_primary(i):
    rep = report(i)
    f = FinalValuation(rep.primary)
    for s, v in rep.primary.values.items():
        if v.classical:
            assert f(s) is v


@settings(max_examples=60, deadline=None)
@given(st.integers(0, len(CORPUS) - 1), st.lists(st.integers(0, 10_000), min_size=1, max_size=3))
def test_seeds_never_change_verdicts(i, picks):
    base = report(i)
    nodes = base.graph.nodes
    seeds = [TAtom(Quote(nodes[k % len(nodes)])) for k in picks]
    seeded = analyze(CORPUS[i], seeds=seeds)
    for s in nodes:
        assert seeded.primary[s] is base.primary[s]
    for s in seeds:
        assert base.primary.value_of(s, extend=True) is seeded.primary[s]


# T-free theories: the three-valued evaluator must agree with a two-valued one

_elems = st.sampled_from([Constant("a"), Constant("b")])
_names = st.sampled_from([SentenceConstant("A"), SentenceConstant("B")])


def _tfree(var=None):
    atoms = [
        _elems.map(lambda e: PredApp("P", (e,))),
        st.just(PredApp("Q", ())),
        _elems.map(SAtom),
        _names.map(SAtom),
    ]
    if var:
        atoms += [st.just(PredApp("P", (Variable(var),))), st.just(SAtom(Variable(var)))]
    leaf = st.one_of(*atoms)

    def grow(kids):
        options = [
            kids.map(Not),
            *(st.tuples(kids, kids).map(lambda c, k=k: k(*c)) for k in (And, Or, Imp, Iff)),
        ]
        return st.one_of(*options)

    return st.recursive(leaf, grow, max_leaves=6)


@st.composite
def tfree_theory(draw):
    quant = st.tuples(st.sampled_from([Forall, Exists]), _tfree("x")).map(lambda p: p[0]("x", p[1]))
    body = st.one_of(_tfree(), quant, st.tuples(quant, _tfree()).map(lambda p: And(*p)))
    a, b = draw(body), draw(body)
    pset = draw(st.sets(st.sampled_from(["a", "b"])))
    q = draw(st.booleans())
    sig = Signature(predicates={"P": 1, "Q": 0}, constants=("a", "b"), sentence_constants=("A", "B"))
    return Theory(
        signature=sig,
        base_domain=("a", "b"),
        pred_interp={"P": frozenset((e,) for e in pset), "Q": frozenset({()}) if q else frozenset()},
        const_interp={"a": "a", "b": "b"},
        constant_bindings={"A": a, "B": b},
    )


@settings(max_examples=200, deadline=None)
@given(tfree_theory())
def test_classical_agreement_on_t_free_theories(th):
    g = closure((), th)
    assume(not g.t_core)
    h = Hypothesis((), ())
    domain = oracle_domain(th)
    f = FinalValuation(analyze(th).primary)
    for s in g.nodes:
        expected = TV.of(classical_eval(s, th, domain))
        assert kleene_eval(s, h, th, g) is expected
        assert f(s) is expected
