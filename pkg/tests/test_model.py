import pytest

from truthsem.errors import (
    ArityMismatch,
    DuplicateDeclaration,
    InputError,
    NonSentenceNegName,
    ReservedSymbol,
    UnboundConstant,
)
from truthsem.model import Base, Sent, Signature, Theory, base_atom_value, denote, t_target
from truthsem.syntax import Constant, FunctionApp, NegName, Not, PredApp, Quote, SAtom, SentenceConstant, TAtom


def small_theory(**kw):
    sig = Signature(predicates={"P": 1}, functions={"f": 1}, constants=("a", "b"), sentence_constants=("C",))
    args = dict(
        signature=sig,
        base_domain=("a", "b"),
        pred_interp={"P": frozenset({("a",)})},
        fun_interp={"f": {("a",): "b", ("b",): "a"}},
        const_interp={"a": "a", "b": "b"},
        constant_bindings={"C": TAtom(SentenceConstant("C"))},
    )
    args.update(kw)
    return Theory(**args)


def test_reserved_predicates_cannot_be_declared():
    with pytest.raises(ReservedSymbol):
        Signature(predicates={"T": 1})
    assert issubclass(ReservedSymbol, DuplicateDeclaration)


def test_duplicate_symbols_rejected():
    with pytest.raises(DuplicateDeclaration):
        Signature(predicates={"P": 1}, constants=("P",))


def test_validation():
    with pytest.raises(ArityMismatch):
        small_theory(pred_interp={"P": frozenset({("a", "b")})})
    with pytest.raises(InputError):
        small_theory(fun_interp={"f": {("a",): "b"}})
    with pytest.raises(UnboundConstant):
        small_theory(const_interp={"a": "a"})
    with pytest.raises(UnboundConstant):
        small_theory(constant_bindings={})


def test_denotation():
    th = small_theory()
    a = Constant("a")
    assert denote(a, th) == Base("a")
    assert denote(FunctionApp("f", (a,)), th) == Base("b")
    c = SentenceConstant("C")
    assert denote(c, th) == Sent(TAtom(c))
    assert denote(NegName(c), th) == Sent(Not(TAtom(c)))
    q = Quote(PredApp("P", (a,)))
    assert denote(q, th) == Sent(PredApp("P", (a,)))


def test_functions_on_sentences_give_the_default_sentence():
    th = small_theory()
    t = FunctionApp("f", (Quote(PredApp("P", (Constant("a"),))),))
    assert denote(t, th) == Sent(th.default_sentence)
    assert th.default_sentence == th.constant_bindings["C"]


def test_negname_of_base_element():
    th = small_theory()
    with pytest.raises(NonSentenceNegName):
        denote(NegName(Constant("a")), th)
    assert t_target(NegName(Constant("a")), th) is None
    assert t_target(Constant("a"), th) is None


def test_base_atoms():
    th = small_theory()
    a, b = Constant("a"), Constant("b")
    assert base_atom_value(PredApp("P", (a,)), th)
    assert not base_atom_value(PredApp("P", (b,)), th)
    assert not base_atom_value(PredApp("P", (SentenceConstant("C"),)), th)
    assert base_atom_value(SAtom(SentenceConstant("C")), th)
    assert not base_atom_value(SAtom(a), th)


def test_name_of_round_trips():
    th = small_theory()
    for e in (Base("a"), Sent(PredApp("P", (Constant("b"),)))):
        assert denote(th.name_of(e), th) == e
