"""Fuzzy subgraph connectivity: max-min connectivity between vertices and
fuzzy subgraphs, fuzzy bridges, and related structural analysis."""

from fuzzyconn.connectivity import (
    ConnValue,
    PathWitness,
    Semantics,
    TEquivalence,
    all_pairs_conn,
    conn_matrix,
    conn_subgraphs,
    conn_vertex,
    conn_vertex_to_subgraph,
    is_t_connected,
    path_strength,
    t_equivalence_classes,
)
from fuzzyconn.document import GraphDocument, Role, load_document, parse_document, serialize_document
from fuzzyconn.graph import FuzzyGraph, FuzzySubgraph, build_graph, disjoint_pair, induced_subgraph
from fuzzyconn.oracle import OracleBudget, oracle_bridges, oracle_conn
from fuzzyconn.reference import ChdModel, bundled_chd_model
from fuzzyconn.report import ConnectivityReport, generate_report
from fuzzyconn.structural import (
    BridgeReport,
    StrengthSummary,
    TheoremCheck,
    bridge_realizing_subgraphs,
    check_theorems,
    eccentric_vertex,
    fuzzy_bridges,
    is_complete_fuzzy_graph,
    is_fuzzy_tree,
    strength_summary,
    strongest_path,
)

__version__ = "0.1.0"
