"""Local-search solver and benchmark tooling for minimum weight
dominating set problems."""

from .bench import RunRecord, RunStats, emit_csv, emit_json, run_bench
from .cc import CcStrategy, allowed_add_set
from .generator import GenSpec, generate
from .graph import (Graph, ParseError, WeightedGraph, WeightScheme,
                    apply_weighting, complement, load_graph, parse_dimacs,
                    parse_edge_list, parse_weight_spec, two_level_neighbors)
from .oracle import (BudgetExceededError, ExactResult, enumerate_mwds,
                     exact_mwds, validate)
from .scoring import LegacyScoreKind, for_removal_negation, legacy_score
from .solver import (SolveResult, SolverConfig, algo_label, config_for_algo,
                     greedy_construct, select_add, select_remove_rule1,
                     select_remove_rule2, solve, solve_variant_matrix)
from .state import Score, SearchState, new_state

__version__ = "0.1.0"

__all__ = [
    "RunRecord", "RunStats", "emit_csv", "emit_json", "run_bench",
    "CcStrategy", "allowed_add_set",
    "GenSpec", "generate",
    "Graph", "ParseError", "WeightedGraph", "WeightScheme",
    "apply_weighting", "complement", "load_graph", "parse_dimacs",
    "parse_edge_list", "parse_weight_spec", "two_level_neighbors",
    "BudgetExceededError", "ExactResult", "enumerate_mwds", "exact_mwds",
    "validate",
    "LegacyScoreKind", "for_removal_negation", "legacy_score",
    "SolveResult", "SolverConfig", "algo_label", "config_for_algo",
    "greedy_construct", "select_add", "select_remove_rule1",
    "select_remove_rule2", "solve", "solve_variant_matrix",
    "Score", "SearchState", "new_state",
    "__version__",
]
