"""Fixed-parameter MaxSat above the matching number of the incidence graph."""

from .branch import SearchStats, SolveResult, measure, solve
from .formula import CnfFormula, Instance, parse_dimacs
from .genoracle import GenConfig, brute_maxsat, gen_random, hypergraph_to_cnf
from .hitset import Hypergraph, parse_hypergraph, solve_m_minus_k
from .incidence import matching_number

__all__ = [
    "CnfFormula",
    "GenConfig",
    "Hypergraph",
    "Instance",
    "SearchStats",
    "SolveResult",
    "brute_maxsat",
    "gen_random",
    "hypergraph_to_cnf",
    "matching_number",
    "measure",
    "parse_dimacs",
    "parse_hypergraph",
    "solve",
    "solve_m_minus_k",
]
