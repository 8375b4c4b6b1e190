"""Interval representations of planar graphs with at most three intervals per vertex."""

from .builder import DisplayState, base_triangle, build, build_depth2, represent_triangulation
from .decomposition import FullDecomposition, InnerDecomposition, decompose_inner, extend_full, verify_inner
from .errors import (
    InvariantViolation,
    MinimalityViolation,
    NonPlanar,
    NoSeparator,
    NotFourConnected,
    ParseError,
    PlanarIntervalError,
    SearchExhausted,
    SelfLoop,
    ValidationError,
    VerificationFailed,
)
from .formats import parse_graph
from .generate import GeneratorConfig, gen_triangulation
from .graph import Graph, PlanarEmbedding, Triangulation, faces, is_four_connected, planar_embed, triangulate_induced
from .representation import Interval, Representation, normalize
from .separators import find_nonempty_triangles, peeling_schedule, select_minimal, split
from .verify import (
    VerificationReport,
    broken_ends,
    check_invariants,
    count_check,
    depth,
    displayed,
    intersection_graph,
)

__all__ = [
    "DisplayState", "FullDecomposition", "GeneratorConfig", "Graph", "InnerDecomposition", "Interval",
    "InvariantViolation", "MinimalityViolation", "NoSeparator", "NonPlanar", "NotFourConnected", "ParseError",
    "PlanarEmbedding", "PlanarIntervalError", "Representation", "SearchExhausted", "SelfLoop", "Triangulation",
    "ValidationError", "VerificationFailed", "VerificationReport", "base_triangle", "broken_ends", "build",
    "build_depth2", "check_invariants", "count_check", "decompose_inner", "depth", "displayed", "extend_full",
    "faces", "find_nonempty_triangles", "gen_triangulation", "intersection_graph", "is_four_connected",
    "normalize", "parse_graph", "peeling_schedule", "planar_embed", "represent_triangulation", "select_minimal",
    "split", "triangulate_induced", "verify_inner",
]
