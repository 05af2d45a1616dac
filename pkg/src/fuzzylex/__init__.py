"""Fuzzy dictionary matching with corpus-specific block edit costs."""

from .cost_model import (
    AxiomViolation,
    ConflictingSymmetry,
    CostModel,
    CostModelError,
    EpsilonEpsilon,
    MalformedLine,
    ShortCircuit,
    c1,
    epsilon_min,
    gamma1_arcs,
    kappa,
    load_cost_model,
    parse_cost_model,
    serialize_cost_model,
)
from .distance import (
    AlignmentTrace,
    DistanceValue,
    InputTooLarge,
    Segment,
    classic_levenshtein,
    dp_distance,
    enumerate_distance,
)
from .search import (
    EmptyQuery,
    MatchResult,
    NonPositiveThreshold,
    SearchDiagnostics,
    approx_search,
)
from .trie import LexTrie, build_trie, load_dictionary

__all__ = [
    "AlignmentTrace",
    "AxiomViolation",
    "ConflictingSymmetry",
    "CostModel",
    "CostModelError",
    "DistanceValue",
    "EmptyQuery",
    "EpsilonEpsilon",
    "InputTooLarge",
    "LexTrie",
    "MalformedLine",
    "MatchResult",
    "NonPositiveThreshold",
    "SearchDiagnostics",
    "Segment",
    "ShortCircuit",
    "approx_search",
    "build_trie",
    "c1",
    "classic_levenshtein",
    "dp_distance",
    "enumerate_distance",
    "epsilon_min",
    "gamma1_arcs",
    "kappa",
    "load_cost_model",
    "load_dictionary",
    "parse_cost_model",
    "serialize_cost_model",
]
