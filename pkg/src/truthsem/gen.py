"""Random small theories with self-reference, for differential and property tests."""

from __future__ import annotations

import random
from typing import Iterator, Optional

from .errors import ClosureBudgetExceeded
from .graph import closure
from .model import Signature, Theory
from .syntax import (
    And,
    Constant,
    Exists,
    FAtom,
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
    UAtom,
    Variable,
    expand_sugar,
)

DOMAIN = ("a", "b")


def _atom(rng: random.Random, names, var: Optional[str] = None, t_free: bool = False):
    c = SentenceConstant(rng.choice(names))
    elem = Constant(rng.choice(DOMAIN))
    if t_free:
        choices = [lambda: PredApp("P", (elem,)), lambda: PredApp("Q", ()), lambda: SAtom(c), lambda: SAtom(elem)]
        if var is not None:
            x = Variable(var)
            choices += [lambda: PredApp("P", (x,)), lambda: SAtom(x)]
        return rng.choice(choices)()
    choices = [
        lambda: TAtom(c),
        lambda: TAtom(c),
        lambda: FAtom(c),
        lambda: UAtom(c),
        lambda: PredApp("P", (elem,)),
        lambda: PredApp("Q", ()),
        lambda: SAtom(c),
        lambda: TAtom(elem),
        lambda: TAtom(Quote(PredApp("P", (elem,)))),
        lambda: TAtom(Quote(Not(TAtom(c)))),
    ]
    if var is not None:
        x = Variable(var)
        choices += [lambda: PredApp("P", (x,)), lambda: TAtom(Quote(PredApp("P", (x,))))]
    return rng.choice(choices)()


def random_formula(rng: random.Random, names, depth: int, var: Optional[str] = None, t_free: bool = False):
    if depth <= 0 or rng.random() < 0.3:
        return _atom(rng, names, var, t_free)
    kind = rng.choice(["not", "and", "or", "imp", "iff", "forall", "exists"] if var is None
                      else ["not", "and", "or", "imp", "iff"])
    if kind == "not":
        return Not(random_formula(rng, names, depth - 1, var, t_free))
    if kind in ("forall", "exists"):
        body = random_formula(rng, names, depth - 1, "x", t_free)
        return (Forall if kind == "forall" else Exists)("x", body)
    cls = {"and": And, "or": Or, "imp": Imp, "iff": Iff}[kind]
    return cls(random_formula(rng, names, depth - 1, var, t_free), random_formula(rng, names, depth - 1, var, t_free))


def random_theory(rng: random.Random, n_constants: int = 3, depth: int = 2, t_free: bool = False) -> Theory:
    names = tuple(f"C{i}" for i in range(n_constants))
    sig = Signature(
        predicates={"P": 1, "Q": 0},
        constants=DOMAIN,
        sentence_constants=names,
    )
    p_true = frozenset((e,) for e in DOMAIN if rng.random() < 0.5)
    q_true = frozenset({()}) if rng.random() < 0.5 else frozenset()
    bindings = {n: expand_sugar(random_formula(rng, names, depth, t_free=t_free)) for n in names}
    return Theory(
        signature=sig,
        base_domain=DOMAIN,
        pred_interp={"P": p_true, "Q": q_true},
        const_interp={e: e for e in DOMAIN},
        constant_bindings=bindings,
    )


def random_theories(count: int, seed: int = 0, max_core: int = 8, max_t_atoms: int = 8,
                    max_nodes: int = 60) -> Iterator[Theory]:
    """``count`` random theories whose closures stay within the given sizes."""
    rng = random.Random(seed)
    made = 0
    while made < count:
        th = random_theory(rng, n_constants=rng.choice((1, 2, 3)), depth=rng.choice((1, 2, 3)))
        try:
            g = closure((), th, cap=max_nodes)
        except ClosureBudgetExceeded:
            continue
        if len(g.t_core) > max_core or sum(isinstance(s, TAtom) for s in g.nodes) > max_t_atoms:
            continue
        made += 1
        yield th
