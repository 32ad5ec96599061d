"""Semantic dependency graph over a finite sentence closure.

Each sentence points at the sentences its value depends on: a compound at its
immediate components, a quantified sentence at all of its instances over the
quantifier range, and ``T(t)`` at the sentence ``t`` names.

The quantifier range is the base domain plus the *registered* sentences,
i.e. the sentences reachable from the constant bindings when quantifiers are
instantiated over base elements only.  The range depends on the theory alone,
so adding query seeds never changes the value of an existing node.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Sequence

from .errors import ClosureBudgetExceeded
from .model import Base, Sent, Theory, t_target
from .syntax import BINARY, QUANTIFIERS, Not, TAtom, complexity, pretty, substitute

DEFAULT_NODE_CAP = 20_000

RANGE_NOTE = (
    "quantifiers range over the finite base domain plus the registered sentences "
    "of the theory, not over all sentences of the language"
)


@dataclass(frozen=True, eq=False)
class DepGraph:
    nodes: tuple                      # canonical order
    edges: Mapping[object, tuple]     # sentence -> dependencies
    t_core: tuple                     # sentences named by some T-atom, canonical order
    quantifier_range: tuple           # DomainElements
    registered: frozenset = frozenset()
    labels: Mapping[object, str] = field(default_factory=dict)

    def __contains__(self, sentence) -> bool:
        return sentence in self.edges

    def __len__(self) -> int:
        return len(self.nodes)

    def label(self, sentence) -> str:
        text = self.labels.get(sentence)
        return text if text is not None else pretty(sentence)

    def t_edges(self):
        """Pairs ``(T-atom, named sentence)``."""
        return [(s, self.edges[s][0]) for s in self.nodes if isinstance(s, TAtom) and self.edges[s]]

    def structural_edges(self):
        return [(s, d) for s in self.nodes if not isinstance(s, TAtom) for d in self.edges[s]]


def dependencies(s, th: Theory, quantifier_range: Sequence) -> tuple:
    if isinstance(s, Not):
        return (s.body,)
    if isinstance(s, BINARY):
        return (s.left, s.right)
    if isinstance(s, QUANTIFIERS):
        return tuple(substitute(s.body, s.var, th.name_of(e)) for e in quantifier_range)
    if isinstance(s, TAtom):
        target = t_target(s.arg, th)
        return () if target is None else (target,)
    return ()


def _grow(edges: Dict, todo: list, th: Theory, qrange: Sequence, cap: int) -> None:
    while todo:
        s = todo.pop()
        if s in edges:
            continue
        deps = dependencies(s, th, qrange)
        edges[s] = deps
        if len(edges) > cap:
            raise ClosureBudgetExceeded(f"closure exceeds {cap} sentences")
        todo.extend(d for d in deps if d not in edges)


def registered_sentences(th: Theory, cap: int = DEFAULT_NODE_CAP) -> frozenset:
    base_range = [Base(a) for a in th.base_domain]
    edges: Dict = {}
    _grow(edges, list(th.bound_sentences()), th, base_range, cap)
    return frozenset(edges)


def _canonical(sentences: Iterable, labels: Dict) -> tuple:
    for s in sentences:
        if s not in labels:
            labels[s] = pretty(s)
    return tuple(sorted(sentences, key=lambda s: (labels[s], repr(s))))


def _finish(edges: Dict, qrange: tuple, registered: frozenset, labels: Dict) -> DepGraph:
    nodes = _canonical(edges, labels)
    targets = {edges[s][0] for s in edges if isinstance(s, TAtom) and edges[s]}
    return DepGraph(
        nodes=nodes,
        edges=edges,
        t_core=_canonical(targets, labels),
        quantifier_range=qrange,
        registered=registered,
        labels=labels,
    )


def closure(seeds: Iterable, th: Theory, cap: int = DEFAULT_NODE_CAP) -> DepGraph:
    """Least dependency-closed sentence set containing the seeds and all bindings."""
    registered = registered_sentences(th, cap)
    labels: Dict = {}
    qrange = tuple(Base(a) for a in th.base_domain) + tuple(
        Sent(s) for s in _canonical(registered, labels)
    )
    edges: Dict = {}
    _grow(edges, list(registered) + list(seeds), th, qrange, cap)
    return _finish(edges, qrange, registered, labels)


def extend(g: DepGraph, seeds: Iterable, th: Theory, cap: int = DEFAULT_NODE_CAP) -> DepGraph:
    """``g`` plus the closure of ``seeds``, keeping the quantifier range fixed."""
    seeds = [s for s in seeds if s not in g.edges]
    if not seeds:
        return g
    edges = dict(g.edges)
    _grow(edges, seeds, th, g.quantifier_range, cap)
    return _finish(edges, g.quantifier_range, g.registered, dict(g.labels))


def sccs(g: DepGraph) -> list:
    """Strongly connected components, dependencies before dependants.

    Iterative Tarjan; each component is a tuple in canonical node order.
    """
    order = {s: i for i, s in enumerate(g.nodes)}
    index: Dict = {}
    low: Dict = {}
    on_stack = set()
    stack: list = []
    result = []
    counter = 0
    for root in g.nodes:
        if root in index:
            continue
        work = [(root, iter(g.edges[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.edges[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                result.append(tuple(sorted(comp, key=order.__getitem__)))
    return result


def is_grounded_component(g: DepGraph, comp: Sequence) -> bool:
    """A singleton without a self-loop."""
    return len(comp) == 1 and comp[0] not in g.edges[comp[0]]


def structurally_acyclic(g: DepGraph) -> bool:
    """True when every non-T edge strictly lowers formula complexity."""
    return all(complexity(d) < complexity(s) for s, d in g.structural_edges())


_COLORS = {"TRUE": "palegreen", "FALSE": "lightcoral", "UNDET": "lightgray"}


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(g: DepGraph, verdicts: Optional[Mapping] = None) -> str:
    """Graphviz text for ``g``; T-edges are dashed.

    ``verdicts`` maps sentences to three-valued truth values and colours nodes.
    """
    ids = {s: f"n{i}" for i, s in enumerate(g.nodes)}
    lines = ["digraph {"]
    if g.nodes:
        lines.append('  node [shape=box, fontname="monospace"];')
    for s in g.nodes:
        attrs = [f'label="{_dot_escape(g.label(s))}"']
        if verdicts is not None and s in verdicts:
            value = verdicts[s]
            attrs.append(f'style=filled, fillcolor="{_COLORS[value.name]}"')
            attrs.append(f'tooltip="{value.symbol}"')
        lines.append(f"  {ids[s]} [{', '.join(attrs)}];")
    for s in g.nodes:
        for d in g.edges[s]:
            style = " [style=dashed]" if isinstance(s, TAtom) else ""
            lines.append(f"  {ids[s]} -> {ids[d]}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
