"""Two-layer semantics for first-order theories with a self-referential truth predicate.

The primary semantics is the maximal intrinsic fixed point of the Strong
Kleene jump; the final semantics is classical, with ``T(t)`` true exactly
when ``t`` names a sentence that is primary-true.
"""

from .errors import (
    ClosureBudgetExceeded,
    EnumerationBudgetExceeded,
    InputError,
    InternalInvariantViolation,
    OutsideClosure,
    ParseError,
    TruthsemError,
)
from .finalsem import FinalValuation, final_eval, final_valuation, verdict
from .fixpoint import FixpointReport, PrimaryValuation, analyze, enumerate_fixed_points, maximal_intrinsic
from .graph import RANGE_NOTE, DepGraph, closure, export_dot
from .kleene import TV, Hypothesis, jump, kleene_eval
from .laws import SCHEMAS, check_schema, run_law_suite, tarski_failures
from .model import Signature, Theory
from .program import BACKEND
from .syntax import parse_formula, parse_sentence, pretty
from .theoryfile import load_theory, parse_theory

__all__ = [
    "BACKEND", "RANGE_NOTE", "SCHEMAS", "TV",
    "ClosureBudgetExceeded", "DepGraph", "EnumerationBudgetExceeded", "FinalValuation",
    "FixpointReport", "Hypothesis", "InputError", "InternalInvariantViolation", "OutsideClosure",
    "ParseError", "PrimaryValuation", "Signature", "Theory", "TruthsemError",
    "analyze", "check_schema", "closure", "enumerate_fixed_points", "export_dot", "final_eval",
    "final_valuation", "jump", "kleene_eval", "load_theory", "maximal_intrinsic", "parse_formula",
    "parse_sentence", "parse_theory", "pretty", "run_law_suite", "tarski_failures", "verdict",
]
