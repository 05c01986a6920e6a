"""Clique partition and cluster deletion: greedy approximations, exact
oracles, and verification suites."""

from .clique_solvers import (
    CliqueStats,
    GuardExceeded,
    clique_number,
    enumerate_max_cliques,
    exact_opt,
    exact_partition,
    lambda_min,
    max_clique,
)
from .cograph import (
    Cotree,
    decompose_cograph,
    is_cograph,
    is_preceq_greatest,
    is_preceq_maximal,
    preceq_compare,
)
from .generators import build_G_ell, fixture, fixture_graph, k_sequence, tight_family_edges
from .graph_core import (
    CliquePartition,
    Graph,
    GraphFormatError,
    InvalidPartitionError,
    deleted_edges,
    format_edge_list,
    parse_edge_list,
    partition_edges,
    validate_partition,
)
from .matching import max_matching
from .partition_algs import (
    all_executions,
    greedy,
    greedy_edmonds,
    ordering_heuristic,
    run_algorithm,
    smart_greedy,
    verify_bound,
)
from .perm_graph import Permutation, build_permutation_graph, max_clique_perm

__version__ = "0.1.0"
