"""Directed girth, distance ("transparency") matrices, and empirical audits
of the Caccetta-Haggkvist and second-neighbourhood conjectures."""

__version__ = "0.1.0"

from .conjectures import (
    ConjectureReport,
    HypothesisError,
    check_ch,
    check_ch_equivalent,
    check_seymour,
    exhaustive_sweep,
    range_of,
    search_counterexamples,
)
from .constructions import (
    ConstructionSpec,
    LabelingTrace,
    circulant,
    evaluate_labeling_claims,
    forward_greedy,
    labeling_generate,
    nonuniform_ge,
    nonuniform_regular,
    uniform_ge,
)
from .counting import (
    audit_counting_formulas,
    elimination_bound,
    enumerate_directed_cycles,
    oracle_cycles_through_arc,
    paper_cycles_through_arc,
    theorem51_claim,
    total_j_cycles,
)
from .digraph import (
    Arc,
    DifferenceProfile,
    Digraph,
    DigraphError,
    Direction,
    add_arc,
    classify_arc,
    difference_profile,
    ex_count,
    min_out_degree,
    new_digraph,
)
from .io import parse_edge_list, to_dot, to_edge_list
from .reports import AuditReport, CountAudit
from .transparency import (
    CycleCertificate,
    TransparencyMatrix,
    audit_contraction,
    compute_transparency,
    contract_graph,
    contractible_pairs,
    girth,
    neighborhood_counts,
    paper_contract_update,
    shortest_cycle_certificate,
)
