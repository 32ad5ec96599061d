import numpy as np
import pytest

from tests.conftest import bundled
from truthsem.errors import EnumerationBudgetExceeded, OutsideClosure
from truthsem.fixpoint import (
    analyze,
    classical_restriction,
    enumerate_fixed_points,
    intrinsic_mask,
    is_intrinsic,
    least_fixed_point,
    maximal_points,
)
from truthsem.graph import closure
from truthsem.kleene import TV, jump
from truthsem.syntax import Not, PredApp, Quote, SentenceConstant, TAtom
from truthsem.theoryfile import parse_theory

T, F, U = TV.TRUE, TV.FALSE, TV.UNDET

# counts computed by the brute-force oracle, then frozen
CENSUS = {"truthteller": (3, 1), "liar": (1, 1), "logician": (2, 2), "strong_liar": (1, 1), "curry": (1, 1)}


@pytest.mark.parametrize("name", sorted(CENSUS))
def test_census(name):
    _, rep = bundled(name)
    assert (rep.n_fixed, rep.n_intrinsic) == CENSUS[name]


def test_truthteller_fixed_points_in_canonical_order():
    th, rep = bundled("truthteller")
    assert [h.values for h in rep.all_fixed] == [(U,), (F,), (T,)]
    assert [h.values for h in rep.intrinsic] == [(U,)]


def test_logician_is_true():
    th, rep = bundled("logician")
    log = th.constant_bindings["Log"]
    assert rep.primary[log] is T
    assert rep.least.values == (U, U)


def test_every_listed_point_is_fixed():
    for name in CENSUS:
        th, rep = bundled(name)
        for h in rep.all_fixed:
            assert jump(h, th, rep.graph) == h


def test_intrinsic_mask_matches_pairwise_definition():
    for name in CENSUS:
        _, rep = bundled(name)
        points = rep.all_fixed
        assert [is_intrinsic(h, points) for h in points] == list(intrinsic_mask(rep.fixed))


def test_maximal_is_unique_and_is_the_join():
    for name in CENSUS:
        _, rep = bundled(name)
        top = maximal_points(rep.intrinsic)
        assert top == [rep.maximal_intrinsic]
        joined = rep.intrinsic[0]
        for h in rep.intrinsic[1:]:
            joined = joined.join(h)
        assert joined == rep.maximal_intrinsic


def test_least_fixed_point_below_maximal():
    for name in CENSUS:
        th, rep = bundled(name)
        assert least_fixed_point(th, rep.graph) == rep.least
        assert rep.least.leq(rep.maximal_intrinsic)


def test_budget():
    text = "\n".join(f"let X{i} := T(X{i})" for i in range(5))
    th = parse_theory(text)
    g = closure((), th)
    with pytest.raises(EnumerationBudgetExceeded) as info:
        enumerate_fixed_points(th, g, budget=4)
    assert info.value.core_size == 5
    rep = analyze(th, budget=4, allow_incomplete=True)
    assert not rep.complete and rep.fixed is None
    assert rep.maximal_intrinsic == rep.least
    assert analyze(th, budget=5).n_fixed == 3 ** 5


def test_primary_valuation_outside_closure():
    th, rep = bundled("liar")
    neg = Not(th.constant_bindings["L"])
    q = TAtom(Quote(TAtom(Quote(neg))))
    with pytest.raises(OutsideClosure):
        rep.primary.value_of(q)
    assert rep.primary.value_of(q, extend=True) is U
    grounded = TAtom(Quote(PredApp("l", ())))
    th2, rep2 = bundled("curry")
    assert rep2.primary.value_of(grounded, extend=True) is F
    assert rep2.primary.value_of(Not(grounded), extend=True) is T


def test_extension_agrees_with_reanalysis():
    th, rep = bundled("logician")
    log = SentenceConstant("Log")
    seeds = [TAtom(Quote(TAtom(log))), Not(TAtom(Quote(Not(TAtom(log)))))]
    seeded = analyze(th, seeds=seeds)
    for s in seeds:
        assert rep.primary.value_of(s, extend=True) is seeded.primary[s]
    for s in rep.graph.nodes:
        assert seeded.primary[s] is rep.primary[s]


def test_classical_restriction():
    th, rep = bundled("grounded")
    c = classical_restriction(rep.primary)
    assert c.domain == rep.primary.determination_domain
    assert c[th.constant_bindings["Z"]] is True
    assert c[th.constant_bindings["A"]] is False


def test_fixed_array_is_int_codes():
    _, rep = bundled("logician")
    assert rep.fixed.dtype == np.int8
    assert rep.fixed.shape == (2, 2)
