"""Distance-vector routing: synchronous Bellman-Ford exchange to a fixed point.

Each round every router rebuilds its vector from the vectors its direct
neighbours held at the end of the previous round; no router ever sees the
topology beyond its own links.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

from .topology import Topology

_UNREACHED = np.int64(2**50)


@dataclass(frozen=True)
class RouteEntry:
    dest: int
    next: int
    cost: int


@dataclass(frozen=True)
class RoutingTable:
    owner: int
    entries: tuple[RouteEntry, ...]

    def __post_init__(self):
        object.__setattr__(self, "_by_dest", {e.dest: e for e in self.entries})

    def __getitem__(self, dest: int) -> RouteEntry:
        try:
            return self._by_dest[dest]
        except KeyError:
            raise KeyError(f"router {self.owner} has no route to {dest}") from None

    def __iter__(self) -> Iterator[RouteEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def cost(self, dest: int) -> int:
        return self[dest].cost

    def next_hop(self, dest: int) -> int:
        return self[dest].next


@dataclass(frozen=True)
class RoutingState:
    topology: Topology
    tables: Mapping[int, RoutingTable]
    rounds: int

    def __getitem__(self, owner: int) -> RoutingTable:
        try:
            return self.tables[owner]
        except KeyError:
            raise KeyError(f"unknown router {owner}") from None


def compute_dvr(t: Topology) -> RoutingState:
    """Run synchronous distance-vector exchange until no vector changes.

    When several neighbours offer the same cost, the neighbour with the
    higher router id becomes the next hop.
    """
    ids = t.routers
    n = len(ids)
    index = {r: i for i, r in enumerate(ids)}

    # Neighbour lists sorted by descending id so argmin lands on the highest id among ties.
    nbr_idx = []
    nbr_cost = []
    for r in ids:
        nbrs = sorted(t.neighbors(r), reverse=True)
        nbr_idx.append(np.array([index[v] for v, _ in nbrs], dtype=np.intp))
        nbr_cost.append(np.array([c for _, c in nbrs], dtype=np.int64)[:, None])

    dist = np.full((n, n), _UNREACHED, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    nxt = np.full((n, n), -1, dtype=np.intp)
    np.fill_diagonal(nxt, np.arange(n))

    rounds = 0
    while True:
        new_dist = np.empty_like(dist)
        new_nxt = np.empty_like(nxt)
        for i in range(n):
            if len(nbr_idx[i]) == 0:
                new_dist[i] = dist[i]
                new_nxt[i] = nxt[i]
                continue
            offers = nbr_cost[i] + dist[nbr_idx[i]]
            best = offers.argmin(axis=0)
            new_dist[i] = offers[best, np.arange(n)]
            new_nxt[i] = nbr_idx[i][best]
            new_dist[i, i] = 0
            new_nxt[i, i] = i
        changed = not np.array_equal(new_dist, dist)
        dist, nxt = new_dist, new_nxt
        if not changed:
            break
        rounds += 1

    if (dist >= _UNREACHED).any():
        raise AssertionError("distance-vector exchange left unreachable entries")

    tables = {}
    for i, owner in enumerate(ids):
        row_d = dist[i].tolist()
        row_n = nxt[i].tolist()
        entries = tuple(RouteEntry(ids[j], ids[row_n[j]], row_d[j]) for j in range(n))
        tables[owner] = RoutingTable(owner, entries)
    return RoutingState(t, tables, rounds)


def route_cost(state: RoutingState, src: int, dst: int) -> int:
    """Cost from ``src`` to ``dst`` as recorded in ``src``'s own table."""
    if dst not in state.topology:
        raise KeyError(f"unknown router {dst}")
    return state[src].cost(dst)


def next_hop_path(state: RoutingState, src: int, dst: int) -> list[int]:
    """Routers visited following next hops from ``src`` to ``dst`` (inclusive).

    Raises RuntimeError if the walk exceeds n-1 hops.
    """
    path = [src]
    limit = len(state.topology) - 1
    while path[-1] != dst:
        if len(path) > limit:
            raise RuntimeError(f"forwarding loop from {src} toward {dst}: {path}")
        path.append(state[path[-1]].next_hop(dst))
    return path


def equal_cost_next_hops(state: RoutingState, src: int, dst: int) -> list[int]:
    """All neighbours of ``src`` lying on some shortest path to ``dst``."""
    if src == dst:
        return [src]
    target = state[src].cost(dst)
    t = state.topology
    return [h for h, c in t.neighbors(src) if c + state[h].cost(dst) == target]


def apsp_oracle(t: Topology) -> dict[int, dict[int, int]]:
    """All-pairs shortest-path costs by Floyd-Warshall over the full link set.

    Shares no code with :func:`compute_dvr`; used to check it.
    """
    ids = t.routers
    n = len(ids)
    index = {r: i for i, r in enumerate(ids)}
    d = np.full((n, n), np.inf)
    np.fill_diagonal(d, 0.0)
    for lk in t.links:
        i, j = index[lk.a], index[lk.b]
        d[i, j] = d[j, i] = lk.cost
    for k in range(n):
        d = np.minimum(d, d[:, k, None] + d[None, k, :])
    return {ids[i]: {ids[j]: int(d[i, j]) for j in range(n)} for i in range(n)}
