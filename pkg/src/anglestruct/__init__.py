"""Angle structures with prescribed edge or Delaunay invariants.

Decides, for a triangulated closed surface and a prescribed invariant,
whether a spherical or hyperbolic angle structure exists; constructs an
explicit witness when it does and a violating face-subset certificate
when it does not.  All arithmetic is exact (rational multiples of pi).
"""

from .angles import (
    AngleStructure,
    EdgeFunction,
    GeometryClass,
    InvariantKind,
    classify_structure,
    classify_triangle,
    corner_transform,
    corner_transform_inverse,
    delaunay_invariant,
    edge_invariant,
)
from .feasibility import (
    FeasibilityReport,
    QuantifierRange,
    Verdict,
    check_closure,
    check_hyperbolic_delaunay,
    check_hyperbolic_edge,
    check_spherical_delaunay,
    check_spherical_edge,
)
from .lp import (
    DualAssignment,
    InfeasibleCertificate,
    LpProblem,
    build_construction_lp,
    check_via_lp,
    construct_hyperbolic_with_delaunay,
    construct_spherical_with_delaunay,
    construct_structure,
    extract_subset_certificate,
    simplex_solve,
)
from .ratpi import PI, RatPi, parse, render
from .surface import (
    Corner,
    FaceSubset,
    Triangulation,
    corners_facing,
    edge_set,
    enumerate_subsets,
    validate,
)

__all__ = [
    "AngleStructure",
    "Corner",
    "DualAssignment",
    "EdgeFunction",
    "FaceSubset",
    "FeasibilityReport",
    "GeometryClass",
    "InfeasibleCertificate",
    "InvariantKind",
    "LpProblem",
    "PI",
    "QuantifierRange",
    "RatPi",
    "Triangulation",
    "Verdict",
    "build_construction_lp",
    "check_closure",
    "check_hyperbolic_delaunay",
    "check_hyperbolic_edge",
    "check_spherical_delaunay",
    "check_spherical_edge",
    "check_via_lp",
    "classify_structure",
    "classify_triangle",
    "construct_hyperbolic_with_delaunay",
    "construct_spherical_with_delaunay",
    "construct_structure",
    "corner_transform",
    "corner_transform_inverse",
    "corners_facing",
    "delaunay_invariant",
    "edge_invariant",
    "edge_set",
    "enumerate_subsets",
    "extract_subset_certificate",
    "parse",
    "render",
    "simplex_solve",
    "validate",
]
