"""Graovac-Pisanski (modified Wiener) index of connected graphs.

Three independent routes are provided: orbit sums of distances, the
generalized cut method over edge partitions coarser than Theta*, and
closed formulas for zig-zag tubulenes ZT(n, h).
"""

from ._kernels import BACKEND
from .automorphisms import (
    OrbitPartition,
    enumerate_automorphisms,
    group_order,
    vertex_orbits,
)
from .errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    EmptyGraphError,
    GPIndexError,
    NotCoarserError,
    ParseError,
    PartitionError,
    SearchLimitExceeded,
    SelfLoopError,
    TubuleneSpecError,
    VertexRangeError,
)
from .graph import (
    Graph,
    bfs_distances,
    connected_components,
    from_edge_list,
    is_connected,
    parse_edge_list,
    read_edge_list,
)
from .indices import (
    IndexReport,
    distance_to_set,
    gp_cut_method,
    gp_direct,
    gp_from_automorphisms,
    index_report,
    orbit_wiener_sum,
    wiener,
    wiener_subset,
    wiener_weighted,
)
from .quotient import WeightedQuotient, quotient_graph, weight_by_orbit
from .relations import (
    EdgePartition,
    PartitionKind,
    coarsen,
    is_coarser,
    theta_related,
    theta_star_partition,
)
from .tubulene import (
    ClosedFormResult,
    TubuleneSpec,
    closed_form_gp,
    full_report,
    generate,
    orbit_wiener_closed,
    structural_automorphisms,
    theoretical_orbits,
)

__version__ = "0.1.0"
