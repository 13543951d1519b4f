"""Domatic and edge-domatic partitions of uniform hypergraphs."""

from hypdomatic.hypergraph import (
    AdjacencyStructure,
    Complete,
    CompleteBipartite,
    Hypergraph,
    degrees,
    generate_complete,
    generate_complete_bipartite,
    line_graph,
    make_hypergraph,
    two_section,
)
from hypdomatic.domination import (
    DomaticPartition,
    ValidationReport,
    domination_number,
    is_dominating,
    is_total_dominating,
    validate_partition,
)
from hypdomatic.solver import (
    SolveBudget,
    SolveResult,
    brute_force_domatic,
    domatic_number,
    edge_domatic_number,
    max_domatic,
    total_domatic_number,
    total_edge_domatic_number,
)
from hypdomatic.baranyai import Factorization, baranyai
from hypdomatic.closed_form import (
    FormulaResult,
    Quantity,
    binomial,
    construct_partition,
    degree_identity_check,
    formula,
)

__all__ = [
    "AdjacencyStructure",
    "Complete",
    "CompleteBipartite",
    "DomaticPartition",
    "Factorization",
    "FormulaResult",
    "Hypergraph",
    "Quantity",
    "SolveBudget",
    "SolveResult",
    "ValidationReport",
    "baranyai",
    "binomial",
    "brute_force_domatic",
    "construct_partition",
    "degree_identity_check",
    "degrees",
    "domatic_number",
    "domination_number",
    "edge_domatic_number",
    "formula",
    "generate_complete",
    "generate_complete_bipartite",
    "is_dominating",
    "is_total_dominating",
    "line_graph",
    "make_hypergraph",
    "max_domatic",
    "total_domatic_number",
    "total_edge_domatic_number",
    "two_section",
    "validate_partition",
]
