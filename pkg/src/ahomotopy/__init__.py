"""A-homotopy theory of finite simple graphs.

Graph maps and exponential graphs, stabilised paths and homotopy grids, and
cones under the span ``I_0 <- I_0 ⊔ I_0 -> I_0`` together with a certified
obstruction to cone maps into cycle graphs.
"""

from .cones import (Cone, ConeMap, ObstructionReport, certify_no_cone_map, cone_from_quadruple,
                    identity_cone, obstruction_cone, pushforward_cone, search_cone_maps,
                    verify_cone_map)
from .errors import (AHomotopyError, CompositionError, ConcatError, InternalLimit, InvalidCone,
                     InvalidGraph, InvalidInput, InvalidMap, InvalidTarget, NotAPath, ParseError,
                     ResourceLimit)
from .graphs import (DEFAULT_CAP, Graph, GraphMap, box_product, compose, constant_map,
                     count_homomorphisms, cube_graph, cycle_graph, discrete_graph, disjoint_union,
                     enumerate_homomorphisms, exponential_graph, identity_map, is_graph_map,
                     make_graph, path_graph)
from .homotopy import (Decision, Verdict, are_homotopic, nullhomotopic_in_cycle,
                       path_homotopic_rel_endpoints)
from .paths import (HomotopyGrid, HomotopyTrace, StablePath, active_length, canonicalize, concat,
                    constant_path, endpoints, grid_boundary, hconcat, hreverse, is_cycle, map_path,
                    reverse, winding_number)

__all__ = [
    "active_length",
    "AHomotopyError",
    "are_homotopic",
    "box_product",
    "canonicalize",
    "certify_no_cone_map",
    "compose",
    "CompositionError",
    "concat",
    "ConcatError",
    "Cone",
    "cone_from_quadruple",
    "ConeMap",
    "constant_map",
    "constant_path",
    "count_homomorphisms",
    "cube_graph",
    "cycle_graph",
    "Decision",
    "DEFAULT_CAP",
    "discrete_graph",
    "disjoint_union",
    "endpoints",
    "enumerate_homomorphisms",
    "exponential_graph",
    "Graph",
    "GraphMap",
    "grid_boundary",
    "hconcat",
    "HomotopyGrid",
    "HomotopyTrace",
    "hreverse",
    "identity_cone",
    "identity_map",
    "InternalLimit",
    "InvalidCone",
    "InvalidGraph",
    "InvalidInput",
    "InvalidMap",
    "InvalidTarget",
    "is_cycle",
    "is_graph_map",
    "make_graph",
    "map_path",
    "NotAPath",
    "nullhomotopic_in_cycle",
    "obstruction_cone",
    "ObstructionReport",
    "ParseError",
    "path_graph",
    "path_homotopic_rel_endpoints",
    "pushforward_cone",
    "ResourceLimit",
    "reverse",
    "search_cone_maps",
    "StablePath",
    "Verdict",
    "verify_cone_map",
    "winding_number",
]
