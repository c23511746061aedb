"""Shortest non-contractible and non-separating cycles on combinatorial surfaces."""
from .classify import CycleClass, HomologyClassifier, classify_simple_cycle
from .errors import NoNontrivialCycle, SurfaceError
from .generators import dumbbell, grid_cylinder, grid_torus, schema_surface
from .oracle import exhaustive_both, per_vertex_both
from .solver import SolveResult, solve
from .surface import Surface, build_from_faces, load_surf, parse_surf, serialize

__all__ = [
    "CycleClass", "HomologyClassifier", "classify_simple_cycle", "NoNontrivialCycle",
    "SurfaceError", "dumbbell", "grid_cylinder", "grid_torus", "schema_surface",
    "exhaustive_both", "per_vertex_both", "SolveResult", "solve", "Surface",
    "build_from_faces", "load_surf", "parse_surf", "serialize",
]
