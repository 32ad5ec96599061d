"""Command-line front end.

    truthsem eval THEORY [-s SENTENCE ...]
    truthsem fixpoints THEORY
    truthsem laws THEORY
    truthsem graph THEORY

Exit codes: 0 ok, 1 law failure, 2 budget exceeded, 3 input error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .errors import (
    ClosureBudgetExceeded,
    EnumerationBudgetExceeded,
    InputError,
    NonSentenceNegName,
    OutsideClosure,
    TruthsemError,
)
from .finalsem import FinalValuation, verdict
from .fixpoint import DEFAULT_BUDGET, FixpointReport, analyze
from .graph import RANGE_NOTE, export_dot
from .laws import SCHEMAS, check_equivalence_transfer, format_failure, run_law_suite, tarski_failures
from .syntax import parse_sentence, pretty
from .theoryfile import load_theory

EXIT_OK, EXIT_LAW_FAILURE, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3
COMMANDS = ("eval", "fixpoints", "laws", "graph")
NOT_COMPUTED = "-"


@dataclass
class VerdictRow:
    sentence: str
    primary: Optional[str]      # symbol, or None when not computed
    final: str
    name: Optional[str] = None


@dataclass
class FixedPointRow:
    values: List[str]
    intrinsic: bool
    least: bool
    maximal: bool


@dataclass
class LawRow:
    schema: str
    family: str
    instances: int
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class RunReport:
    command: str
    theory: str
    range_note: str = RANGE_NOTE
    complete: bool = True
    budget: int = DEFAULT_BUDGET
    core: List[str] = field(default_factory=list)
    n_nodes: int = 0
    n_fixed: Optional[int] = None
    n_intrinsic: Optional[int] = None
    least: List[str] = field(default_factory=list)
    maximal_intrinsic: List[str] = field(default_factory=list)
    fixed_points: List[FixedPointRow] = field(default_factory=list)
    verdicts: List[VerdictRow] = field(default_factory=list)
    laws: List[LawRow] = field(default_factory=list)
    tarski_failures: List[str] = field(default_factory=list)
    equivalence: List[LawRow] = field(default_factory=list)
    timing: Optional[float] = None

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        data = json.loads(text)
        data["fixed_points"] = [FixedPointRow(**r) for r in data["fixed_points"]]
        data["verdicts"] = [VerdictRow(**r) for r in data["verdicts"]]
        data["laws"] = [LawRow(**r) for r in data["laws"]]
        data["equivalence"] = [LawRow(**r) for r in data["equivalence"]]
        return cls(**data)

    @property
    def laws_passed(self) -> bool:
        return all(row.passed for row in self.laws)

    def header(self) -> List[str]:
        lines = [f"# truthsem {self.command}: {self.theory}", f"# finite range: {self.range_note}"]
        if self.complete:
            lines.append(f"# primary semantics: maximal intrinsic fixed point (core size {len(self.core)})")
        else:
            lines.append(
                f"# primary semantics INCOMPLETE: core size {len(self.core)} exceeds the budget of "
                f"{self.budget}; least fixed point shown"
            )
        return lines

    def to_text(self) -> str:
        out = self.header()
        if self.command == "eval":
            out += _verdict_lines(self.verdicts)
        elif self.command == "fixpoints":
            out += self._fixpoint_lines()
        elif self.command == "laws":
            out += self._law_lines()
        if self.timing is not None:
            out.append(f"elapsed: {self.timing:.3f} s")
        return "\n".join(out) + "\n"

    def _fixpoint_lines(self) -> List[str]:
        out = [f"closure: {self.n_nodes} sentences", "core:"]
        out += [f"  [{i}] {s}" for i, s in enumerate(self.core)]
        if self.n_fixed is not None:
            out.append(f"fixed points: {self.n_fixed}  intrinsic: {self.n_intrinsic}")
        out.append(f"least:             {' '.join(self.least)}")
        label = "maximal intrinsic:" if self.complete else "maximal intrinsic: not computed"
        out.append(f"{label} {' '.join(self.maximal_intrinsic)}".rstrip())
        for row in self.fixed_points:
            marks = "".join(m for m, on in (("i", row.intrinsic), ("l", row.least), ("m", row.maximal)) if on)
            out.append(f"  {' '.join(row.values)}  {marks}".rstrip())
        return out

    def _law_lines(self) -> List[str]:
        out = []
        for row in self.laws:
            status = "pass" if row.passed else "FAIL"
            out.append(f"{status}  {row.schema:<22} {row.family:<12} {row.instances} instances")
            out += [f"      {f}" for f in row.failures]
        failed = sum(not r.passed for r in self.laws)
        out.append(f"{len(self.laws) - failed}/{len(self.laws)} schemas pass")
        if self.tarski_failures:
            out.append("T-schema instances false in the final semantics:")
            out += [f"  {s}" for s in self.tarski_failures]
        for row in self.equivalence:
            status = "same" if row.passed else "differ"
            out.append(f"T/F/U verdicts {status}: {row.schema}")
            out += [f"      {f}" for f in row.failures]
        return out


def _verdict_lines(rows: Sequence[VerdictRow]) -> List[str]:
    out = ["primary final  sentence"]
    for r in rows:
        text = r.sentence if r.name is None else f"{r.name} := {r.sentence}"
        out.append(f"{r.primary or NOT_COMPUTED:^7} {r.final:^5}  {text}")
    return out


def _symbols(h) -> List[str]:
    return [v.symbol for v in h.values]


def _census(rep: RunReport, fx: FixpointReport, listing: bool) -> None:
    rep.complete = fx.complete
    rep.core = [fx.graph.label(s) for s in fx.core]
    rep.n_nodes = len(fx.graph)
    rep.least = _symbols(fx.least)
    if fx.complete:
        rep.n_fixed, rep.n_intrinsic = fx.n_fixed, fx.n_intrinsic
        rep.maximal_intrinsic = _symbols(fx.maximal_intrinsic)
    if listing and fx.complete:
        least, top = list(fx.least.values), list(fx.maximal_intrinsic.values)
        for h, flag in zip(fx.all_fixed, fx.intrinsic_flags):
            vals = list(h.values)
            rep.fixed_points.append(FixedPointRow(_symbols(h), bool(flag), vals == least, vals == top))


def _queries(texts: Sequence[str], th) -> list:
    """``(name, sentence)`` pairs; a bare sentence-constant name stands for its binding."""
    out = []
    for text in texts:
        key = text.strip()
        if key in th.constant_bindings:
            out.append((key, th.constant_bindings[key]))
        else:
            out.append((None, parse_sentence(text, th.signature)))
    return out


def _analyze(th, seeds, args) -> FixpointReport:
    return analyze(th, seeds=seeds, budget=args.budget, allow_incomplete=True)


def _eval_rows(queries, fx: FixpointReport) -> List[VerdictRow]:
    final = FinalValuation(fx.primary)
    rows = []
    for name, s in queries:
        primary, value = verdict(s, fx, final=final)
        rows.append(VerdictRow(pretty(s), None if primary is None else primary.symbol, value.symbol, name))
    return rows


def run(argv: Sequence[str]) -> tuple:
    """Parse ``argv``, do the work, return ``(output text, exit code)``."""
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    th = load_theory(args.theory)
    rep = RunReport(args.command, args.theory, budget=args.budget)
    code = EXIT_OK

    if args.command == "eval" and args.sentence:
        queries = _queries(args.sentence, th)
    elif args.command == "eval":
        queries = [(n, th.constant_bindings[n]) for n in th.signature.sentence_constants]
    else:
        queries = _queries(args.sentence or (), th)
    seeds = [s for _, s in queries] if args.seed_closure else []
    fx = _analyze(th, seeds, args)

    if args.command == "eval":
        try:
            rep.verdicts = _eval_rows(queries, fx)
        except OutsideClosure:
            if not args.auto_extend:
                raise
            fx = _analyze(th, [s for _, s in queries], args)
            rep.verdicts = _eval_rows(queries, fx)
        _census(rep, fx, listing=False)
    elif args.command == "fixpoints":
        _census(rep, fx, listing=True)
    elif args.command == "laws":
        _census(rep, fx, listing=False)
        if fx.complete:
            for law in run_law_suite(fx):
                family = next(s.family for s in SCHEMAS if s.name == law.schema)
                failures = [format_failure(*f) for f in law.failures]
                rep.laws.append(LawRow(law.schema, family, law.instances, failures))
            rep.tarski_failures = [pretty(s) for s in tarski_failures(fx)]
            for (_, a), (_, b) in zip(queries[::2], queries[1::2]):
                eq = check_equivalence_transfer(a, b, fx)
                title = f"{pretty(a)}  vs  {pretty(b)}"
                rep.equivalence.append(LawRow(title, "diagnostic", eq.instances,
                                              [format_failure(*f) for f in eq.failures]))
    else:
        _census(rep, fx, listing=False)

    if not fx.complete:
        code = EXIT_BUDGET
    elif rep.laws and not rep.laws_passed:
        code = EXIT_LAW_FAILURE
    if args.timing:
        rep.timing = time.perf_counter() - started

    if args.command == "graph" or args.dot:
        text = _dot(rep, fx)
    elif args.json:
        text = rep.to_json()
    else:
        text = rep.to_text()
    return text, code


def _dot(rep: RunReport, fx: FixpointReport) -> str:
    header = "\n".join("// " + line.lstrip("# ") for line in rep.header())
    return header + "\n" + export_dot(fx.graph, fx.primary.values)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="truthsem",
        description="Primary (three-valued fixed point) and final (two-valued) semantics "
                    "for theories with a self-referential truth predicate.",
        epilog=f"Note: {RANGE_NOTE}.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("theory", help="theory file, or the name of a bundled theory such as 'liar'")
    p.add_argument("-s", "--sentence", action="append", metavar="SENTENCE",
                   help="sentence to evaluate (repeatable); a bare binding name stands for its sentence")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--dot", action="store_true", help="emit the dependency graph in Graphviz format")
    p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    p.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET, metavar="N",
                   help=f"enumerate fixed points only if there are at most N core sentences "
                        f"(3^N hypotheses; default {DEFAULT_BUDGET})")
    p.add_argument("--auto-extend", action="store_true",
                   help="re-run the analysis with the queries added when they refer to unregistered sentences")
    p.add_argument("--seed-closure", action="store_true",
                   help="add the queried sentences to the closure before the analysis")
    p.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte-identity)")
    return p


def _budget(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("budget must be non-negative")
    return n


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        text, code = run(argv)
    except (InputError, OutsideClosure, NonSentenceNegName, OSError, UnicodeDecodeError) as exc:
        print(f"truthsem: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ClosureBudgetExceeded, EnumerationBudgetExceeded) as exc:
        print(f"truthsem: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TruthsemError as exc:
        print(f"truthsem: internal error: {exc}", file=sys.stderr)
        return 70
    except SystemExit as exc:  # argparse
        return EXIT_INPUT if exc.code else EXIT_OK
    out = getattr(_namespace(argv), "out", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def _namespace(argv):
    return build_parser().parse_args(argv)


if __name__ == "__main__":
    sys.exit(main())
