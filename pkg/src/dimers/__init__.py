"""Dimer models on the two-torus and their derived combinatorics."""

from .surface import (
    BLACK, BW, WB, WHITE, Edge, Face, TorusBipartiteGraph, ValidationError,
    Violation, faces, join_move, maps_isomorphic, spider_move, split_move,
    validate,
)
from .quiver import QuiverWithPotential, dualize, grading_of, relations, subquiver
from .matchings import (
    LatticePolygon, classify, convex_hull, enumerate_pms, has_interior_point,
    is_isolated, is_perfect_matching, pm_homology, pm_polygon,
)
from .zigzag import is_consistent, rcharge_feasible, slope_side_check, zigzag_paths
from .stability import (
    SupportRep, find_stabilizing_theta, is_theta_stable, pm_is_theta_stable,
    rep_from_cosupport, theta_stable_pms, triangulate,
)
from .algebra import (
    INFINITE, algebra_fingerprint, dimension_without_vertex, is_acyclic,
    rewriting_dimension, strict_sources_sinks, truncated_dimension,
)
from .mutations import (
    exchange_graph, model_fingerprint, mutable_vertices, mutate_dimer,
    mutate_pm_minus, mutate_pm_plus, mutate_qp, mutated_quiver_prediction,
    qp_isomorphic_vertex_fixing, transport_pm,
)
from .fixtures import Fixture, fixture_names, load_fixture
from .modelio import analysis_report, dump_model, load_model

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
