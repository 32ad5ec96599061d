"""Compile a dependency graph into a flat instruction array for the kernels.

Nodes are ordered by formula complexity, so every structural child precedes
its parent and one forward pass evaluates the whole program.  T-atoms are
leaves that read the hypothesis vector; this is what makes the pass acyclic.

Two interchangeable kernels run these programs: the compiled extension
``_ckernel`` and the numpy implementation in ``_pykernel``.  The compiled one
is used when importable unless ``TRUTHSEM_PURE_PYTHON`` is set.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import _pykernel
from .kleene import BINARY_TABLES, NOT_TABLE, TV
from .model import Theory, base_atom_value
from .syntax import And, Exists, Forall, Iff, Imp, Not, Or, PredApp, SAtom, TAtom, complexity

OP_CONST, OP_HYP, OP_NOT, OP_AND, OP_OR, OP_IMP, OP_IFF, OP_ALL, OP_ANY = range(9)
_BIN = {And: OP_AND, Or: OP_OR, Imp: OP_IMP, Iff: OP_IFF}

#: rows OP_AND..OP_IFF minus OP_AND; entry [a * 3 + b]
BIN_TABLE = np.array(
    [[BINARY_TABLES[name][a][b] for a in range(3) for b in range(3)] for name in ("and", "or", "imp", "iff")],
    dtype=np.int8,
)
NOT_ARRAY = np.array([NOT_TABLE[TV(v)] for v in range(3)], dtype=np.int8)


def _load_kernel():
    if os.environ.get("TRUTHSEM_PURE_PYTHON"):
        return _pykernel, "python"
    try:
        from . import _ckernel
    except ImportError:
        return _pykernel, "python"
    return _ckernel, "compiled"


kernel, BACKEND = _load_kernel()


def available_backends() -> dict:
    backends = {"python": _pykernel}
    try:
        from . import _ckernel

        backends["compiled"] = _ckernel
    except ImportError:
        pass
    return backends


@dataclass(frozen=True, eq=False)
class Program:
    nodes: tuple        # sentences in evaluation order
    op: np.ndarray      # int8
    a0: np.ndarray      # int32
    a1: np.ndarray      # int32
    kids: np.ndarray    # int32, operand lists of quantifier nodes
    roots: np.ndarray   # int32, node index of each core sentence
    core: tuple

    @property
    def arrays(self):
        return self.op, self.a0, self.a1, self.kids, self.roots


def _cone(g, starts):
    seen = set()
    todo = list(starts)
    while todo:
        s = todo.pop()
        if s in seen:
            continue
        seen.add(s)
        if not isinstance(s, TAtom):
            todo.extend(g.edges[s])
    return seen


def compile_program(g, th: Theory, full: bool = False) -> Program:
    """Flatten the part of ``g`` that the core sentences depend on (all of it if ``full``)."""
    core = g.t_core
    core_index = {s: i for i, s in enumerate(core)}
    wanted = set(g.nodes) if full else _cone(g, core)
    rank = {s: i for i, s in enumerate(g.nodes)}
    nodes = tuple(sorted(wanted, key=lambda s: (complexity(s), rank[s])))
    pos = {s: i for i, s in enumerate(nodes)}
    n = len(nodes)
    op = np.zeros(n, dtype=np.int8)
    a0 = np.zeros(n, dtype=np.int32)
    a1 = np.zeros(n, dtype=np.int32)
    kids: list = []
    for i, s in enumerate(nodes):
        if isinstance(s, TAtom):
            deps = g.edges[s]
            if deps:
                op[i], a0[i] = OP_HYP, core_index[deps[0]]
            else:
                op[i], a0[i] = OP_CONST, TV.FALSE
        elif isinstance(s, (PredApp, SAtom)):
            op[i], a0[i] = OP_CONST, TV.of(base_atom_value(s, th))
        elif isinstance(s, Not):
            op[i], a0[i] = OP_NOT, pos[s.body]
        elif isinstance(s, (Forall, Exists)):
            op[i] = OP_ALL if isinstance(s, Forall) else OP_ANY
            a0[i], a1[i] = len(kids), len(g.edges[s])
            kids.extend(pos[d] for d in g.edges[s])
        else:
            op[i], a0[i], a1[i] = _BIN[type(s)], pos[s.left], pos[s.right]
    roots = np.array([pos[s] for s in core], dtype=np.int32)
    return Program(nodes, op, a0, a1, np.array(kids, dtype=np.int32), roots, core)


def find_fixed_points(prog: Program, backend=None) -> np.ndarray:
    """All hypotheses ``h`` over the core with ``jump(h) == h``, canonical order.

    Hypotheses are rows of TV codes; the order is lexicographic with the first
    core sentence most significant and ``| < ⊥ < ⊤``.
    """
    k = backend or kernel
    found = np.asarray(k.find_fixed_points(*prog.arrays, BIN_TABLE, NOT_ARRAY), dtype=np.int8)
    if len(prog.core) == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return found.reshape(-1, len(prog.core))


def evaluate_batch(prog: Program, hyps: np.ndarray, backend=None) -> np.ndarray:
    """Node values for each hypothesis row; shape ``(len(hyps), len(prog.nodes))``."""
    k = backend or kernel
    hyps = np.ascontiguousarray(hyps, dtype=np.int8)
    if hyps.ndim == 1:
        hyps = hyps.reshape(1, len(prog.core))
    return np.asarray(k.evaluate_batch(*prog.arrays, BIN_TABLE, NOT_ARRAY, hyps), dtype=np.int8)


def jump_batch(prog: Program, hyps: np.ndarray, backend=None) -> np.ndarray:
    return evaluate_batch(prog, hyps, backend)[:, prog.roots]
