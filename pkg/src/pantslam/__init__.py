"""Marked planar maps: distance signatures, laminations, realizability.

A marked map is a combinatorial map on the sphere with three chosen
faces.  The package measures distance signatures through layered
boundary loops, enumerates the integral points of the associated
lamination polytope, decides realizability of a prospective signature,
and constructs witness maps for the realizable ones.
"""

from .combmap import CombinatorialMap, build_map, faces, faces_sharing_vertex
from .constructor import (
    ConstructionResult,
    FamilySpec,
    LabeledBlock,
    connector,
    construct,
    construct_detailed,
    family_graph,
    gamma,
    leg,
    pillowcase,
    pillowcase_mirror,
    pillowcase_sigma,
    search,
    web,
)
from .errors import (
    BadFaceIndex,
    Disconnected,
    DuplicateMarkedFace,
    EmptyLayer,
    InvariantViolated,
    LimitExceeded,
    MalformedRotation,
    NegativeParameter,
    NonPositiveDelta,
    NonSpherical,
    NotClosed,
    NotRealizable,
    NotSimple,
    OutOfRange,
    OverlappingCrossings,
    PantsError,
    SearchExhausted,
    UnknownVertex,
)
from .exploration import (
    BoundaryLoopSet,
    DistanceMatrix,
    LayerSet,
    Loop,
    SigmaGraph,
    boundary_loops,
    classify_loop,
    distance_matrix,
    hemispheres,
    layer,
    make_sigma_graph,
)
from .oracle import (
    CycleCatalog,
    all_simple_cycles,
    lamination_space_bruteforce,
    max_disjoint_type,
)
from .polytope import (
    LaminationPolytope,
    RealizabilityVerdict,
    check_realizable,
    enumerate_points,
    lamination_space,
    nu_transform,
    permute_signature,
    tau_from_mu_nu,
)
from .randmaps import delete_edge, non_bridge_edges, random_map, random_sigma_graph
from .render import render_svg
from .special_loops import (
    NuVector,
    SigmaVector,
    SpecialLoopFamily,
    depth_vector,
    loop_toward,
    sigma_of,
    special_family,
)

__version__ = "1.0.0"

__all__ = [
    "BadFaceIndex",
    "BoundaryLoopSet",
    "CombinatorialMap",
    "ConstructionResult",
    "CycleCatalog",
    "Disconnected",
    "DistanceMatrix",
    "DuplicateMarkedFace",
    "EmptyLayer",
    "FamilySpec",
    "InvariantViolated",
    "LabeledBlock",
    "LaminationPolytope",
    "LayerSet",
    "LimitExceeded",
    "Loop",
    "MalformedRotation",
    "NegativeParameter",
    "NonPositiveDelta",
    "NonSpherical",
    "NotClosed",
    "NotRealizable",
    "NotSimple",
    "NuVector",
    "OutOfRange",
    "OverlappingCrossings",
    "PantsError",
    "RealizabilityVerdict",
    "SearchExhausted",
    "SigmaGraph",
    "SigmaVector",
    "SpecialLoopFamily",
    "UnknownVertex",
    "all_simple_cycles",
    "boundary_loops",
    "build_map",
    "check_realizable",
    "classify_loop",
    "connector",
    "construct",
    "construct_detailed",
    "delete_edge",
    "depth_vector",
    "distance_matrix",
    "enumerate_points",
    "faces",
    "faces_sharing_vertex",
    "family_graph",
    "gamma",
    "hemispheres",
    "lamination_space",
    "lamination_space_bruteforce",
    "layer",
    "leg",
    "loop_toward",
    "make_sigma_graph",
    "max_disjoint_type",
    "non_bridge_edges",
    "nu_transform",
    "permute_signature",
    "pillowcase",
    "pillowcase_mirror",
    "pillowcase_sigma",
    "random_map",
    "random_sigma_graph",
    "render_svg",
    "search",
    "sigma_of",
    "special_family",
    "tau_from_mu_nu",
    "web",
]
