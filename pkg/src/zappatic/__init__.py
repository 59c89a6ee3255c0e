"""Stick curves and good Zappatic surfaces as weighted dual graphs.

Model a reducible nodal curve or a union of surfaces meeting along double
curves as a weighted graph / 2-complex, then compute everything the
combinatorics determines: exact Betti numbers over Q, chi(O), arithmetic and
sectional genus, geometric genus bounds via the restriction-map cokernel,
residue balances of logarithmic 2-forms, planar realizability checks, and
graph-level semistable reduction with verified homological invariance.
"""

from .catalog import catalog, catalog_names
from .curves import (
    CurveEdge,
    CurveGraph,
    CurveVertex,
    InvalidGraphError,
    curve_chi_O,
    curve_counts,
    curve_degree,
    curve_euler,
    curve_h1,
    curve_pa,
    impossible_stick_curve,
    is_connected,
    make_stick,
    make_tree_stick,
    make_unicyclic_stick,
)
from .documents import (
    DocumentError,
    load_document,
    load_phi,
    parse_document,
    parse_phi,
    save_document,
    serialize_document,
)
from .dot import export_dot
from .homology import ChainComplex, betti_numbers, boundary_matrices, two_cycle_basis
from .invariants import (
    InvariantReport,
    MissingPhiError,
    PgBound,
    PhiSpec,
    chi_O,
    coker_phi_dim,
    degree,
    fibre_invariants,
    normal_crossings_report,
    pg_upper_bound,
    planar_pg_q,
    sectional_genus,
)
from .realizability import (
    CompletionSuggestion,
    CoverageViolation,
    check_planar,
    suggest_completions,
)
from .reduction import (
    ReductionStep,
    ReductionTrace,
    resolve_angle,
    resolve_open_face,
    semistable_reduce,
    triangulate_closed_face,
)
from .residues import (
    ResidueAssignment,
    SmoothabilityReport,
    Verdict,
    edge_balance,
    is_two_cycle,
    residue_at,
    smoothability_report,
)
from .surfaces import (
    Angle,
    ClosedFace,
    Counts,
    DoubleCurveEdge,
    OpenFace,
    SurfaceVertex,
    ZappaticGraph,
    canonical_cycle,
    canonical_path,
    chi_graph,
    counts,
    hyperplane_section,
    is_normal_crossings,
    one_skeleton,
    require_valid,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "ChainComplex",
    "ClosedFace",
    "CompletionSuggestion",
    "Counts",
    "CoverageViolation",
    "CurveEdge",
    "CurveGraph",
    "CurveVertex",
    "DocumentError",
    "DoubleCurveEdge",
    "InvalidGraphError",
    "InvariantReport",
    "MissingPhiError",
    "OpenFace",
    "PgBound",
    "PhiSpec",
    "ReductionStep",
    "ReductionTrace",
    "ResidueAssignment",
    "SmoothabilityReport",
    "SurfaceVertex",
    "Verdict",
    "ZappaticGraph",
    "betti_numbers",
    "boundary_matrices",
    "canonical_cycle",
    "canonical_path",
    "catalog",
    "catalog_names",
    "check_planar",
    "chi_O",
    "chi_graph",
    "coker_phi_dim",
    "counts",
    "curve_chi_O",
    "curve_counts",
    "curve_degree",
    "curve_euler",
    "curve_h1",
    "curve_pa",
    "degree",
    "edge_balance",
    "export_dot",
    "fibre_invariants",
    "hyperplane_section",
    "impossible_stick_curve",
    "is_connected",
    "is_normal_crossings",
    "is_two_cycle",
    "load_document",
    "load_phi",
    "make_stick",
    "make_tree_stick",
    "make_unicyclic_stick",
    "normal_crossings_report",
    "one_skeleton",
    "parse_document",
    "parse_phi",
    "pg_upper_bound",
    "planar_pg_q",
    "require_valid",
    "residue_at",
    "resolve_angle",
    "resolve_open_face",
    "save_document",
    "sectional_genus",
    "semistable_reduce",
    "serialize_document",
    "smoothability_report",
    "suggest_completions",
    "triangulate_closed_face",
    "two_cycle_basis",
    "validate",
]
