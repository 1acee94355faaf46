"""Pseudo-diameters and the budget-limited reverse-path-forwarding broadcast."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .dvr import RoutingState, RoutingTable


@dataclass(frozen=True)
class PseudoDiameter:
    router: int
    value: int


def pseudo_diameter(table: RoutingTable) -> PseudoDiameter:
    """Largest cost in a router's own table; 0 for a lone router."""
    value = max((e.cost for e in table if e.dest != table.owner), default=0)
    return PseudoDiameter(table.owner, value)


def pseudo_diameters(state: RoutingState) -> dict[int, int]:
    return {r: pseudo_diameter(state[r]).value for r in state.topology.routers}


@dataclass(frozen=True)
class Delivery:
    router: int
    path: tuple[int, ...]
    remaining: int
    decrements: tuple[int, ...]

    @property
    def spent(self) -> int:
        return sum(self.decrements)


@dataclass(frozen=True)
class BroadcastTrace:
    source: int
    budget: int
    payload: bytes
    deliveries: tuple[Delivery, ...]
    # copies a router received but rejected (not from its reverse-path neighbour)
    rejected: int = 0

    def delivery(self, router: int) -> Delivery:
        for d in self.deliveries:
            if d.router == router:
                return d
        raise KeyError(f"router {router} received no copy")

    @property
    def delivered(self) -> list[int]:
        return [d.router for d in self.deliveries]


def pd_broadcast(state: RoutingState, source: int, payload: bytes = b"") -> BroadcastTrace:
    """Flood ``payload`` from ``source`` with a budget of its pseudo-diameter.

    A router forwards a copy to every neighbour except the one it came from,
    in ascending id order, when the link cost fits in the remaining budget.
    The receiver keeps the copy only if the sender is its own next hop back
    toward ``source``; every other copy is dropped.
    """
    topo = state.topology
    budget = pseudo_diameter(state[source]).value
    first = Delivery(source, (source,), budget, ())
    accepted = {source: first}
    order = [first]
    rejected = 0
    queue = deque([first])
    while queue:
        here = queue.popleft()
        u = here.router
        upstream = here.path[-2] if len(here.path) > 1 else None
        for v, cost in topo.neighbors(u):
            if v == upstream:
                continue
            left = here.remaining - cost
            if left < 0:
                continue
            if v == source or state[v].next_hop(source) != u or v in accepted:
                rejected += 1
                continue
            got = Delivery(v, here.path + (v,), left, here.decrements + (cost,))
            accepted[v] = got
            order.append(got)
            queue.append(got)
    return BroadcastTrace(source, budget, payload, tuple(order), rejected)
