"""Finite interpreted theories and the denotation of closed terms.

The extended domain consists of the declared base elements plus sentences.
Terms denote a :class:`Base` element or a :class:`Sent` sentence.  All
formulas handed to this module are assumed to be sugar-free (the parser and
``expand_sugar`` guarantee that).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

from .errors import (
    ArityMismatch,
    DuplicateDeclaration,
    InputError,
    NonSentenceNegName,
    ReservedSymbol,
    UnboundConstant,
    UnknownSymbol,
)
from .syntax import (
    Constant,
    Exists,
    FunctionApp,
    NegName,
    Not,
    PredApp,
    Quote,
    RESERVED,
    SAtom,
    SentenceConstant,
    TAtom,
    Variable,
    free_vars,
    walk,
)


@dataclass(frozen=True)
class Base:
    element: str


@dataclass(frozen=True)
class Sent:
    sentence: object


DomainElement = Union[Base, Sent]

#: used as the value of functions on sentence arguments when a theory binds no constants
PLACEHOLDER_SENTENCE = Exists("x", SAtom(Variable("x")))


@dataclass(frozen=True)
class Signature:
    predicates: Mapping[str, int] = field(default_factory=dict)
    functions: Mapping[str, int] = field(default_factory=dict)
    constants: tuple = ()
    sentence_constants: tuple = ()

    def __post_init__(self):
        seen = set()
        for name in (
            list(self.predicates) + list(self.functions)
            + list(self.constants) + list(self.sentence_constants)
        ):
            if name in RESERVED:
                raise ReservedSymbol(f"{name!r} is a built-in predicate and cannot be declared")
            if name in seen:
                raise DuplicateDeclaration(f"symbol {name!r} declared twice")
            seen.add(name)


@dataclass(frozen=True, eq=False)
class Theory:
    """A finite interpretation of a signature plus sentence-constant bindings.

    ``const_interp`` maps every constant (base element names included) to a
    base element.  ``constant_bindings`` maps each sentence constant to the
    sentence it names; bindings may refer to any constant, themselves included.
    """

    signature: Signature
    base_domain: tuple = ()
    pred_interp: Mapping[str, frozenset] = field(default_factory=dict)
    fun_interp: Mapping[str, Mapping[tuple, str]] = field(default_factory=dict)
    const_interp: Mapping[str, str] = field(default_factory=dict)
    constant_bindings: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        self.validate()

    def validate(self):
        sig = self.signature
        dom = set(self.base_domain)
        if len(dom) != len(self.base_domain):
            raise DuplicateDeclaration("repeated base domain element")
        for name, arity in sig.predicates.items():
            for tup in self.pred_interp.get(name, ()):
                if len(tup) != arity:
                    raise ArityMismatch(f"tuple {tup} for {name}/{arity}")
                if not set(tup) <= dom:
                    raise InputError(f"predicate {name} holds of elements outside the domain: {tup}")
        for name in self.pred_interp:
            if name not in sig.predicates:
                raise UnknownSymbol(f"interpretation given for undeclared predicate {name!r}")
        for name, arity in sig.functions.items():
            table = self.fun_interp.get(name, {})
            for args, value in table.items():
                if len(args) != arity or not set(args) <= dom or value not in dom:
                    raise InputError(f"bad entry {args}->{value} for function {name}/{arity}")
            missing = _count_tuples(len(dom), arity) - len(table)
            if missing:
                raise InputError(f"function {name}/{arity} is not total on the domain")
        for name in sig.constants:
            if self.const_interp.get(name) not in dom:
                raise UnboundConstant(f"constant {name!r} does not denote a domain element")
        for name in sig.sentence_constants:
            if name not in self.constant_bindings:
                raise UnboundConstant(f"sentence constant {name!r} has no binding")
        for name, sentence in self.constant_bindings.items():
            if name not in sig.sentence_constants:
                raise UnknownSymbol(f"binding for undeclared sentence constant {name!r}")
            if free_vars(sentence):
                raise InputError(f"binding of {name!r} is not a sentence")

    @property
    def default_sentence(self):
        """Value of any function applied to at least one non-base argument."""
        names = self.signature.sentence_constants
        if names:
            return self.constant_bindings[names[0]]
        return PLACEHOLDER_SENTENCE

    def bound_sentences(self):
        return [self.constant_bindings[n] for n in self.signature.sentence_constants]

    def name_of(self, element: DomainElement):
        """A closed term denoting ``element``."""
        if isinstance(element, Base):
            return Constant(element.element)
        return Quote(element.sentence)


def _count_tuples(n: int, arity: int) -> int:
    return n ** arity


def denote(t, th: Theory) -> DomainElement:
    """Denotation of the closed term ``t`` in ``th``."""
    if isinstance(t, Quote):
        return Sent(t.formula)
    if isinstance(t, SentenceConstant):
        try:
            return Sent(th.constant_bindings[t.name])
        except KeyError:
            raise UnboundConstant(f"sentence constant {t.name!r} has no binding") from None
    if isinstance(t, NegName):
        inner = denote(t.inner, th)
        if isinstance(inner, Base):
            raise NonSentenceNegName(f"{inner.element!r} is not a sentence")
        return Sent(Not(inner.sentence))
    if isinstance(t, Constant):
        try:
            return Base(th.const_interp[t.name])
        except KeyError:
            raise UnboundConstant(f"constant {t.name!r} has no interpretation") from None
    if isinstance(t, FunctionApp):
        args = [denote(a, th) for a in t.args]
        if all(isinstance(a, Base) for a in args):
            key = tuple(a.element for a in args)
            try:
                return Base(th.fun_interp[t.symbol][key])
            except KeyError:
                raise UnknownSymbol(f"no value for {t.symbol}{key}") from None
        return Sent(th.default_sentence)
    if isinstance(t, Variable):
        raise InputError(f"cannot denote open term with free variable {t.name!r}")
    raise TypeError(f"not a term: {t!r}")


def t_target(t, th: Theory) -> Optional[object]:
    """The sentence a truth-predicate argument names, or None for a non-sentence."""
    try:
        d = denote(t, th)
    except NonSentenceNegName:
        return None
    return d.sentence if isinstance(d, Sent) else None


def base_atom_value(a, th: Theory) -> bool:
    """Classical value of an atom built from a base predicate or ``S``."""
    if isinstance(a, SAtom):
        return isinstance(denote(a.arg, th), Sent)
    if isinstance(a, PredApp):
        args = [denote(x, th) for x in a.args]
        if not all(isinstance(x, Base) for x in args):
            return False
        return tuple(x.element for x in args) in th.pred_interp.get(a.symbol, frozenset())
    raise TypeError(f"not a base atom: {a!r}")


def is_t_free(f) -> bool:
    return not any(isinstance(node, TAtom) for node in walk(f))
