import pytest

from tests.conftest import bundled, random_corpus
from truthsem.finalsem import FinalValuation
from truthsem.kleene import TV
from truthsem.oracle import OracleBudgetExceeded, classical_eval, oracle_report
from truthsem.theoryfile import parse_theory

LETTER = {TV.TRUE: "T", TV.FALSE: "F", TV.UNDET: "U"}


def compare(th, rep):
    o = oracle_report(th)
    assert (o.n_fixed, o.n_intrinsic) == (rep.n_fixed, rep.n_intrinsic)
    assert {frozenset((s, LETTER[v]) for s, v in h.as_dict().items()) for h in rep.all_fixed} == o.core_projection()
    f = FinalValuation(rep.primary, extend=True)
    for s in o.sentences:
        assert LETTER[rep.primary.value_of(s, extend=True)] == o.maximal[s], s
        assert (f(s) is TV.TRUE) == o.final[s], s


@pytest.mark.parametrize("name", ["liar", "strong_liar", "truthteller", "curry", "logician", "grounded"])
def test_bundled_agree(name):
    th, rep = bundled(name)
    compare(th, rep)


def test_liar_oracle():
    th, _ = bundled("liar")
    o = oracle_report(th)
    assert o.n_fixed == 1 and set(o.maximal.values()) == {"U"}
    assert o.final[th.constant_bindings["L"]] is False


def test_budget():
    th = parse_theory("\n".join(f"let X{i} := T(X{i})" for i in range(4)))
    with pytest.raises(OracleBudgetExceeded):
        oracle_report(th, max_t_atoms=3)


def test_classical_eval():
    th = parse_theory("domain a b\npred P/1 = { (a) }\nlet A := exists x. P(x)\nlet B := forall x. P(x)")
    assert classical_eval(th.constant_bindings["A"], th) is True
    assert classical_eval(th.constant_bindings["B"], th) is False


def test_random_sample_agrees():
    from truthsem.fixpoint import analyze

    for th in random_corpus()[:15]:
        compare(th, analyze(th))
