import pytest

from tests.conftest import bundled
from truthsem.errors import OutsideClosure
from truthsem.finalsem import FinalValuation, final_eval, final_valuation, verdict
from truthsem.kleene import TV
from truthsem.syntax import Constant, Iff, NegName, Not, Quote, SentenceConstant, TAtom

T, F, U = TV.TRUE, TV.FALSE, TV.UNDET


def named(name, theory):
    th, rep = bundled(theory)
    return th.constant_bindings[name], rep


def test_liar_and_strong_liar():
    s, rep = named("L", "liar")
    assert verdict(s, rep) == (U, F)
    s, rep = named("LL", "strong_liar")
    assert verdict(s, rep) == (U, T)


def test_truthteller():
    s, rep = named("I", "truthteller")
    assert verdict(s, rep) == (U, F)


def test_curry():
    s, rep = named("C", "curry")
    assert verdict(s, rep) == (U, T)
    assert final_eval(TAtom(SentenceConstant("C")), final_valuation(rep)) is F


def test_grounded_truth_coincides():
    s, rep = named("Z", "grounded")
    assert verdict(s, rep) == (T, T)
    s, rep = named("A", "grounded")
    assert verdict(s, rep) == (F, F)


def test_non_sentence_is_not_true():
    _, rep = bundled("grounded")
    f = FinalValuation(rep.primary)
    assert f(TAtom(Constant("0"))) is F


def test_outside_closure():
    _, rep = bundled("liar")
    deep = TAtom(Quote(TAtom(Quote(TAtom(SentenceConstant("L"))))))
    with pytest.raises(OutsideClosure):
        FinalValuation(rep.primary)(deep)
    assert verdict(deep, rep, extend=True) == (U, F)
    liar_atom = TAtom(NegName(SentenceConstant("L")))
    primary, final = verdict(TAtom(Quote(Not(liar_atom))), rep)
    assert primary is None and final is F


def test_extension_property(bundled_report):
    f = FinalValuation(bundled_report.primary)
    for s, v in bundled_report.primary.values.items():
        if v.classical:
            assert f(s) is v


def test_tarski_biconditional_fails_for_strong_liar():
    th, rep = bundled("strong_liar")
    ll = th.constant_bindings["LL"]
    assert FinalValuation(rep.primary)(Iff(TAtom(SentenceConstant("LL")), ll)) is F
