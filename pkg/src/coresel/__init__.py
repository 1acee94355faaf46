"""Pseudo-diameter based core selection for multicore shared-tree multicast."""

from .cores import (
    CandidateCoreSet,
    CoreTable,
    broadcast_pds,
    build_core_table,
    collected_views,
    select_candidates,
)
from .dvr import (
    RouteEntry,
    RoutingState,
    RoutingTable,
    apsp_oracle,
    compute_dvr,
    next_hop_path,
    route_cost,
)
from .locality import EdEstimate, ed, select_core
from .pseudo import BroadcastTrace, Delivery, PseudoDiameter, pd_broadcast, pseudo_diameter
from .topology import (
    Link,
    Topology,
    TopologyError,
    TopologyParseError,
    diameter,
    export,
    load_topology,
    random_topology,
    read_topology,
    reference_topology,
)
from .tree import MulticastGroup, SharedTree, build_shared_tree, deliver, to_dot

__version__ = "0.1.0"
