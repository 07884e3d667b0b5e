"""Rainbow disconnection colorings of graphs.

Edge-connectivity bounds, proper edge colorings, rainbow cut search, the
exact rainbow disconnection number, a decision procedure for cubic graphs,
and an executable encoding of 3-SAT into rainbow cut search.
"""

__version__ = "0.1.0"

from .coloring import (ChromaticIndexResult, chromatic_index_exact,
                       find_proper_k_coloring, is_proper,
                       proper_coloring_delta_plus_one)
from .connectivity import (GomoryHuTree, global_edge_connectivity, gomory_hu,
                           local_edge_connectivity, upper_edge_connectivity)
from .errors import (DEFAULT_NODE_BUDGET, BudgetExceededError, CnfFormatError,
                     GraphFormatError, InvalidInputError)
from .generators import (GRAPH_KINDS, complete_graph, cycle_graph, gen_cnf,
                         gen_graph, petersen_graph, prism_graph,
                         random_cubic_graph, random_tree)
from .graphs import (CutCertificate, EdgeColoring, Graph, certificate_from_side,
                     check_cut_certificate, components, is_connected, is_rainbow,
                     parse_graph, reachable_from, separates, serialize_graph)
from .rainbow import (CubicRdDecision, RainbowDisconnectionCheck, RdResult,
                      SplitPair, certify_rd3_coloring_proper, decide_rd_cubic,
                      find_rainbow_cut_exact, find_rainbow_cut_fixed_k,
                      is_rainbow_disconnected, rd_exact, split_along_rainbow_cut)
from .reduction import (Assignment, CnfFormula, ReductionArtifact,
                        ReductionReport, build_cut_from_assignment,
                        build_reduction, extract_assignment_from_cut,
                        parse_dimacs_cnf, reduction_sidecar,
                        serialize_dimacs_cnf, solve_sat_bruteforce,
                        verify_reduction)

__all__ = [
    "Assignment",
    "BudgetExceededError",
    "ChromaticIndexResult",
    "CnfFormatError",
    "CnfFormula",
    "CubicRdDecision",
    "CutCertificate",
    "DEFAULT_NODE_BUDGET",
    "EdgeColoring",
    "GRAPH_KINDS",
    "GomoryHuTree",
    "Graph",
    "GraphFormatError",
    "InvalidInputError",
    "RainbowDisconnectionCheck",
    "RdResult",
    "ReductionArtifact",
    "ReductionReport",
    "SplitPair",
    "build_cut_from_assignment",
    "build_reduction",
    "certificate_from_side",
    "certify_rd3_coloring_proper",
    "check_cut_certificate",
    "chromatic_index_exact",
    "complete_graph",
    "components",
    "cycle_graph",
    "decide_rd_cubic",
    "extract_assignment_from_cut",
    "find_proper_k_coloring",
    "find_rainbow_cut_exact",
    "find_rainbow_cut_fixed_k",
    "gen_cnf",
    "gen_graph",
    "global_edge_connectivity",
    "gomory_hu",
    "is_connected",
    "is_proper",
    "is_rainbow",
    "is_rainbow_disconnected",
    "local_edge_connectivity",
    "parse_dimacs_cnf",
    "parse_graph",
    "petersen_graph",
    "prism_graph",
    "proper_coloring_delta_plus_one",
    "random_cubic_graph",
    "random_tree",
    "rd_exact",
    "reachable_from",
    "reduction_sidecar",
    "separates",
    "serialize_dimacs_cnf",
    "serialize_graph",
    "solve_sat_bruteforce",
    "split_along_rainbow_cut",
    "upper_edge_connectivity",
    "verify_reduction",
]
