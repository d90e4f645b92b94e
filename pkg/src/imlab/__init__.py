"""Exact independence-number and matching-number bounds, with the machinery to test them."""

from __future__ import annotations

from .bounds import BoundReport, evaluate_all, theorem1_bound
from .coloring import EdgeClass, edge_chromatic_class
from .errors import (BudgetExceeded, ContractError, DefectError, Graph6Error, GraphError, ImlabError,
                     NotApplicable)
from .graph import Graph
from .graph6 import encode_graph6, parse_graph6
from .independence import independence_number, maximum_independent_set
from .invariants import GraphInvariants, InvariantRecord, Limits, compute_record
from .lemmas import IntersectionChain, hall_saturating_matching, telescoping_matching
from .matching import matching_number, maximum_matching, minimum_maximal_matching
from .search import SearchReport, scan

__all__ = [
    "BoundReport", "BudgetExceeded", "ContractError", "DefectError", "EdgeClass", "Graph", "Graph6Error",
    "GraphError", "GraphInvariants", "ImlabError", "IntersectionChain", "InvariantRecord", "Limits",
    "NotApplicable", "SearchReport", "compute_record", "edge_chromatic_class", "encode_graph6",
    "evaluate_all", "hall_saturating_matching", "independence_number", "matching_number",
    "maximum_independent_set", "maximum_matching", "minimum_maximal_matching", "parse_graph6", "scan",
    "telescoping_matching", "theorem1_bound",
]
