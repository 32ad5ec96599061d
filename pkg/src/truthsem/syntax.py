"""Abstract syntax, concrete grammar, pretty-printing and substitution.

Concrete grammar (ASCII)::

    formula  := iff
    iff      := imp ("<->" imp)*
    imp      := or ("->" imp)?
    or       := and ("|" and)*
    and      := unary ("&" unary)*
    unary    := "~" unary | ("forall" | "exists") IDENT "." formula | atom
    atom     := ("T" | "S" | "F" | "U" | "D") "(" term ")"
              | PRED "(" [term ("," term)*] ")" | PRED
              | "(" formula ")"
              | term "=" term
    term     := sum
    sum      := primary ("+" primary)*
    primary  := IDENT | FUN "(" term ("," term)* ")" | "[" formula "]" | "(" term ")"

``=`` and ``+`` are ordinary declared symbols written infix.  Quantifier
scope extends as far right as possible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import ArityMismatch, ParseError, UnknownSymbol

RESERVED = frozenset({"T", "S", "F", "U", "D"})
KEYWORDS = frozenset({"forall", "exists"})


def _node(cls):
    """Frozen dataclass whose hash is computed once; syntax trees get hashed a lot."""
    cls = dataclass(frozen=True)(cls)
    field_hash = cls.__hash__

    def __hash__(self):
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = field_hash(self)
            object.__setattr__(self, "_hash", h)
            return h

    cls.__hash__ = __hash__
    return cls



# ---------------------------------------------------------------- terms


@_node
class Variable:
    name: str


@_node
class Constant:
    name: str


@_node
class FunctionApp:
    symbol: str
    args: tuple


@_node
class SentenceConstant:
    name: str


@_node
class Quote:
    formula: "Formula"


@_node
class NegName:
    """Name of the negation of whatever sentence ``inner`` names."""

    inner: "Term"


Term = Union[Variable, Constant, FunctionApp, SentenceConstant, Quote, NegName]


# ------------------------------------------------------------- formulas


@_node
class PredApp:
    symbol: str
    args: tuple


@_node
class TAtom:
    arg: Term


@_node
class SAtom:
    arg: Term


@_node
class Not:
    body: "Formula"


@_node
class And:
    left: "Formula"
    right: "Formula"


@_node
class Or:
    left: "Formula"
    right: "Formula"


@_node
class Imp:
    left: "Formula"
    right: "Formula"


@_node
class Iff:
    left: "Formula"
    right: "Formula"


@_node
class Forall:
    var: str
    body: "Formula"


@_node
class Exists:
    var: str
    body: "Formula"


# surface-only atoms, removed by expand_sugar


@_node
class FAtom:
    arg: Term


@_node
class UAtom:
    arg: Term


@_node
class DAtom:
    arg: Term


Formula = Union[PredApp, TAtom, SAtom, Not, And, Or, Imp, Iff, Forall, Exists]
SurfaceFormula = Union[Formula, FAtom, UAtom, DAtom]
Sentence = Formula

BINARY = (And, Or, Imp, Iff)
QUANTIFIERS = (Forall, Exists)
NAME_ATOMS = (TAtom, SAtom, FAtom, UAtom, DAtom)


def neg_name(t: Term) -> Term:
    """Build the name of the negation, folding ``NegName(Quote(p))`` to ``Quote(~p)``."""
    if isinstance(t, Quote):
        return Quote(Not(t.formula))
    return NegName(t)


# --------------------------------------------------------- sugar & vars


def expand_sugar(f):
    """Rewrite F/U/D atoms into core formulas built from T and the negation name."""
    if isinstance(f, FAtom):
        t = _expand_term(f.arg)
        return TAtom(neg_name(t))
    if isinstance(f, UAtom):
        t = _expand_term(f.arg)
        return And(Not(TAtom(t)), Not(TAtom(neg_name(t))))
    if isinstance(f, DAtom):
        t = _expand_term(f.arg)
        return Or(TAtom(t), TAtom(neg_name(t)))
    if isinstance(f, (TAtom, SAtom)):
        return type(f)(_expand_term(f.arg))
    if isinstance(f, PredApp):
        return PredApp(f.symbol, tuple(_expand_term(a) for a in f.args))
    if isinstance(f, Not):
        return Not(expand_sugar(f.body))
    if isinstance(f, BINARY):
        return type(f)(expand_sugar(f.left), expand_sugar(f.right))
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, expand_sugar(f.body))
    raise TypeError(f"not a formula: {f!r}")


def _expand_term(t):
    if isinstance(t, Quote):
        return Quote(expand_sugar(t.formula))
    if isinstance(t, FunctionApp):
        return FunctionApp(t.symbol, tuple(_expand_term(a) for a in t.args))
    if isinstance(t, NegName):
        return neg_name(_expand_term(t.inner))
    return t


def has_sugar(f) -> bool:
    return any(isinstance(node, (FAtom, UAtom, DAtom)) for node in walk(f))


def walk(x):
    """Yield every formula and term node reachable from ``x`` (quotes included)."""
    stack = [x]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, (PredApp, FunctionApp)):
            stack.extend(node.args)
        elif isinstance(node, NAME_ATOMS):
            stack.append(node.arg)
        elif isinstance(node, Not):
            stack.append(node.body)
        elif isinstance(node, BINARY):
            stack.append(node.right)
            stack.append(node.left)
        elif isinstance(node, QUANTIFIERS):
            stack.append(node.body)
        elif isinstance(node, Quote):
            stack.append(node.formula)
        elif isinstance(node, NegName):
            stack.append(node.inner)


def free_vars(x) -> frozenset:
    if isinstance(x, Variable):
        return frozenset({x.name})
    if isinstance(x, (Constant, SentenceConstant)):
        return frozenset()
    if isinstance(x, (FunctionApp, PredApp)):
        return frozenset().union(*(free_vars(a) for a in x.args))
    if isinstance(x, Quote):
        return free_vars(x.formula)
    if isinstance(x, NegName):
        return free_vars(x.inner)
    if isinstance(x, NAME_ATOMS):
        return free_vars(x.arg)
    if isinstance(x, Not):
        return free_vars(x.body)
    if isinstance(x, BINARY):
        return free_vars(x.left) | free_vars(x.right)
    if isinstance(x, QUANTIFIERS):
        return free_vars(x.body) - {x.var}
    raise TypeError(f"not a term or formula: {x!r}")


def is_sentence(f) -> bool:
    return not free_vars(f)


def substitute(f, var: str, t: Term):
    """Replace free occurrences of ``var`` by the closed term ``t``.

    Quoted bodies are substituted into as well, since a quote's free variables
    are those of the quoted formula.  ``t`` must be closed, so no capture can
    happen.
    """
    if isinstance(f, Variable):
        return t if f.name == var else f
    if isinstance(f, (Constant, SentenceConstant)):
        return f
    if isinstance(f, FunctionApp):
        return FunctionApp(f.symbol, tuple(substitute(a, var, t) for a in f.args))
    if isinstance(f, Quote):
        return Quote(substitute(f.formula, var, t))
    if isinstance(f, NegName):
        return neg_name(substitute(f.inner, var, t))
    if isinstance(f, PredApp):
        return PredApp(f.symbol, tuple(substitute(a, var, t) for a in f.args))
    if isinstance(f, NAME_ATOMS):
        return type(f)(substitute(f.arg, var, t))
    if isinstance(f, Not):
        return Not(substitute(f.body, var, t))
    if isinstance(f, BINARY):
        return type(f)(substitute(f.left, var, t), substitute(f.right, var, t))
    if isinstance(f, QUANTIFIERS):
        if f.var == var:
            return f
        return type(f)(f.var, substitute(f.body, var, t))
    raise TypeError(f"not a term or formula: {f!r}")


def complexity(f) -> int:
    """Connective and quantifier count; structural edges strictly decrease it."""
    if isinstance(f, Not):
        return 1 + complexity(f.body)
    if isinstance(f, BINARY):
        return 1 + complexity(f.left) + complexity(f.right)
    if isinstance(f, QUANTIFIERS):
        return 1 + complexity(f.body)
    return 0


# ------------------------------------------------------- pretty printer

_PREC = {Iff: 1, Imp: 2, Or: 3, And: 4}
_OPS = {Iff: "<->", Imp: "->", Or: "|", And: "&"}


def pretty(x) -> str:
    """Render a term or formula in the concrete grammar.

    Core formulas print ``T(NegName(t))`` as ``F(t)``; parsing the output and
    expanding sugar gives back the original tree.
    """
    if isinstance(x, (Variable, Constant, SentenceConstant, FunctionApp, Quote, NegName)):
        return _pterm(x)
    return _pform(x, 0)


def _pform(f, ctx: int) -> str:
    if isinstance(f, TAtom) and isinstance(f.arg, NegName):
        return f"F({_pterm(f.arg.inner)})"
    if isinstance(f, NAME_ATOMS):
        return f"{type(f).__name__[0]}({_pterm(f.arg)})"
    if isinstance(f, PredApp):
        if f.symbol == "=" and len(f.args) == 2:
            return f"{_pterm(f.args[0])} = {_pterm(f.args[1])}"
        return f"{f.symbol}({', '.join(_pterm(a) for a in f.args)})"
    if isinstance(f, Not):
        return "~" + _pform(f.body, 5)
    if isinstance(f, QUANTIFIERS):
        kw = "forall" if isinstance(f, Forall) else "exists"
        text = f"{kw} {f.var}. {_pform(f.body, 0)}"
        return f"({text})" if ctx > 0 else text
    if isinstance(f, BINARY):
        prec = _PREC[type(f)]
        if isinstance(f, Imp):
            left, right = _pform(f.left, prec + 1), _pform(f.right, prec)
        else:
            left, right = _pform(f.left, prec), _pform(f.right, prec + 1)
        text = f"{left} {_OPS[type(f)]} {right}"
        return f"({text})" if prec < ctx else text
    raise TypeError(f"not a formula: {f!r}")


def _pterm(t, ctx: int = 0) -> str:
    if isinstance(t, (Variable, Constant, SentenceConstant)):
        return t.name
    if isinstance(t, Quote):
        return f"[{_pform(t.formula, 0)}]"
    if isinstance(t, NegName):
        return f"~{_pterm(t.inner, 1)}"
    if isinstance(t, FunctionApp):
        if t.symbol == "+" and len(t.args) == 2:
            text = f"{_pterm(t.args[0], 0)} + {_pterm(t.args[1], 1)}"
            return f"({text})" if ctx > 0 else text
        return f"{t.symbol}({', '.join(_pterm(a) for a in t.args)})"
    raise TypeError(f"not a term: {t!r}")


# --------------------------------------------------------------- parser

_TOKEN = re.compile(r"<->|->|[~&|().,\[\]=+]|[A-Za-z0-9_]+")


def tokenize(text: str):
    tokens = []
    pos, n = 0, len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text=text)
        tokens.append((m.group(0), pos))
        pos = m.end()
    tokens.append(("<end>", n))
    return tokens


class _Parser:
    def __init__(self, text, signature, variables=()):
        self.text = text
        self.sig = signature
        self.toks = tokenize(text)
        self.i = 0
        self.scope = list(variables)

    # token helpers
    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)][0]

    def pos(self):
        return self.toks[self.i][1]

    def advance(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok[0]

    def expect(self, *options):
        tok = self.peek()
        if tok not in options:
            raise ParseError(f"unexpected {tok!r}", self.pos(), options, self.text)
        return self.advance()

    def fail(self, message, expected=()):
        raise ParseError(message, self.pos(), expected, self.text)

    # formulas
    def parse(self):
        f = self.formula()
        if self.peek() != "<end>":
            self.fail(f"unexpected {self.peek()!r}", ("<end>", "&", "|", "->", "<->"))
        return f

    def formula(self):
        left = self.imp()
        while self.peek() == "<->":
            self.advance()
            left = Iff(left, self.imp())
        return left

    def imp(self):
        left = self.disj()
        if self.peek() == "->":
            self.advance()
            return Imp(left, self.imp())
        return left

    def disj(self):
        left = self.conj()
        while self.peek() == "|":
            self.advance()
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.peek() == "&":
            self.advance()
            left = And(left, self.unary())
        return left

    def unary(self):
        tok = self.peek()
        if tok == "~":
            self.advance()
            return Not(self.unary())
        if tok in KEYWORDS:
            self.advance()
            var = self.advance()
            if not _is_ident(var) or var in KEYWORDS:
                self.i -= 1
                self.fail("expected a variable name", ("<identifier>",))
            self.expect(".")
            self.scope.append(var)
            try:
                body = self.formula()
            finally:
                self.scope.pop()
            return (Forall if tok == "forall" else Exists)(var, body)
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok in RESERVED and self.peek(1) == "(" and tok not in self.scope:
            self.advance()
            self.expect("(")
            arg = self.term()
            self.expect(")")
            return {"T": TAtom, "S": SAtom, "F": FAtom, "U": UAtom, "D": DAtom}[tok](arg)
        if tok in self.sig.predicates and tok not in self.scope and tok != "=":
            return self.pred_app()
        if tok == "(":
            save = self.i
            try:
                self.advance()
                f = self.formula()
                self.expect(")")
                if self.peek() not in ("=", "+"):
                    return f
            except ParseError:
                pass
            self.i = save
        if tok == "<end>" or (tok in ("&", "|", "->", "<->", ")", "]", ",", ".", "=")):
            self.fail(f"unexpected {tok!r}", ("<formula>",))
        start = self.pos()
        left = self.term()
        if self.peek() != "=":
            if isinstance(left, SentenceConstant):
                raise UnknownSymbol(
                    f"sentence constant {left.name!r} is a term; write T({left.name}) "
                    f"to speak of its truth"
                )
            self.fail("expected a formula", ("=",))
        self.advance()
        right = self.term()
        self._check_pred("=", 2, start)
        return PredApp("=", (left, right))

    def pred_app(self):
        start = self.pos()
        name = self.advance()
        args = ()
        if self.peek() == "(":
            self.advance()
            if self.peek() != ")":
                args = self.term_list()
            self.expect(")")
        self._check_pred(name, len(args), start)
        return PredApp(name, tuple(args))

    def _check_pred(self, name, n, start):
        arity = self.sig.predicates.get(name)
        if arity is None:
            raise UnknownSymbol(f"undeclared predicate {name!r} at offset {start}")
        if arity != n:
            raise ArityMismatch(f"predicate {name!r} takes {arity} argument(s), got {n}")

    def term_list(self):
        args = [self.term()]
        while self.peek() == ",":
            self.advance()
            args.append(self.term())
        return args

    # terms
    def term(self):
        left = self.primary()
        while self.peek() == "+":
            self.advance()
            right = self.primary()
            self._check_fun("+", 2)
            left = FunctionApp("+", (left, right))
        return left

    def _check_fun(self, name, n):
        arity = self.sig.functions.get(name)
        if arity is None:
            raise UnknownSymbol(f"undeclared function {name!r}")
        if arity != n:
            raise ArityMismatch(f"function {name!r} takes {arity} argument(s), got {n}")

    def primary(self):
        tok = self.peek()
        if tok == "[":
            self.advance()
            f = self.formula()
            self.expect("]")
            return Quote(f)
        if tok == "(":
            self.advance()
            t = self.term()
            self.expect(")")
            return t
        if not _is_ident(tok) or tok in KEYWORDS:
            self.fail(f"unexpected {tok!r}", ("<term>",))
        self.advance()
        if tok in self.scope:
            return Variable(tok)
        if tok in self.sig.functions and self.peek() == "(":
            self.advance()
            args = self.term_list()
            self.expect(")")
            self._check_fun(tok, len(args))
            return FunctionApp(tok, tuple(args))
        if tok in self.sig.constants:
            return Constant(tok)
        if tok in self.sig.sentence_constants:
            return SentenceConstant(tok)
        if tok in self.sig.functions:
            self._check_fun(tok, 0)
            return FunctionApp(tok, ())
        raise UnknownSymbol(f"unknown symbol {tok!r}")


def _is_ident(tok: str) -> bool:
    return bool(re.fullmatch(r"[A-Za-z0-9_]+", tok))


def parse_formula(text: str, signature, variables: Iterable[str] = ()):
    """Parse ``text`` into a surface formula over ``signature``.

    ``variables`` lists names that may occur free.  Raises ParseError,
    UnknownSymbol or ArityMismatch.
    """
    return _Parser(text, signature, variables).parse()


def parse_sentence(text: str, signature):
    """Parse and expand sugar; the result must be closed."""
    f = expand_sugar(parse_formula(text, signature))
    loose = free_vars(f)
    if loose:
        raise ParseError(f"not a sentence; free variables: {', '.join(sorted(loose))}")
    return f
