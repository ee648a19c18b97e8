"""Disjunctive logic programs with aggregates and weak constraints."""

from .aggregates import BOTTOM, eval_aggregate_atom, eval_literal
from .analysis import (AnalysisError, check_aggregate_stratification, check_safety,
                       detect_assignment_aggregates, validate)
from .grounder import GroundProgram, GroundingError, ground, intelligent_ground, naive_ground
from .model import Atom, Literal, Program, Rule, WeakConstraint, format_interpretation
from .oracle import oracle_answer_sets, oracle_optimal
from .parser import ParseError, parse_atom, parse_interpretation, parse_program
from .pipeline import answer_sets, ground_text, load
from .solver import (CostVector, cost_of, deterministic_consequences, enumerate_answer_sets,
                     is_answer_set, optimal_answer_sets, reduct)

__version__ = "0.1.0"

__all__ = [
    "BOTTOM", "eval_aggregate_atom", "eval_literal",
    "AnalysisError", "check_aggregate_stratification", "check_safety",
    "detect_assignment_aggregates", "validate",
    "GroundProgram", "GroundingError", "ground", "intelligent_ground", "naive_ground",
    "Atom", "Literal", "Program", "Rule", "WeakConstraint", "format_interpretation",
    "oracle_answer_sets", "oracle_optimal",
    "ParseError", "parse_atom", "parse_interpretation", "parse_program",
    "answer_sets", "ground_text", "load",
    "CostVector", "cost_of", "deterministic_consequences", "enumerate_answer_sets",
    "is_answer_set", "optimal_answer_sets", "reduct",
]
