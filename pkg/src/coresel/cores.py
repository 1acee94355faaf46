"""Candidate core selection by pseudo-diameter exchange."""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Mapping

from .dvr import RoutingState
from .pseudo import pd_broadcast, pseudo_diameters

# broad_message wire layout: router id (u32), pseudo-diameter (u64), big-endian
_BROAD = struct.Struct(">IQ")


class UnanimityError(RuntimeError):
    """Routers disagree on the collected pseudo-diameters."""


def encode_broad_message(router: int, pd: int) -> bytes:
    return _BROAD.pack(router, pd)


def decode_broad_message(data: bytes) -> tuple[int, int]:
    return _BROAD.unpack(data)


@dataclass(frozen=True)
class CoreTable:
    rows: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.rows)

    def pd(self, router: int) -> int:
        for r, pd in self.rows:
            if r == router:
                return pd
        raise KeyError(f"router {router} not in core table")

    @property
    def routers(self) -> list[int]:
        return [r for r, _ in self.rows]


@dataclass(frozen=True)
class CandidateCoreSet:
    cores: tuple[int, ...]

    def __post_init__(self):
        if not self.cores:
            raise ValueError("candidate core set is empty")

    def __iter__(self):
        return iter(self.cores)

    def __len__(self) -> int:
        return len(self.cores)


def collected_views(state: RoutingState) -> dict[int, dict[int, int]]:
    """Per-router view of every pseudo-diameter received over the broadcast.

    Every router broadcasts its own value; each router records the messages
    it accepted, keyed by the originating router.
    """
    views: dict[int, dict[int, int]] = {r: {} for r in state.topology.routers}
    pds = pseudo_diameters(state)
    for origin in state.topology.routers:
        trace = pd_broadcast(state, origin, encode_broad_message(origin, pds[origin]))
        for d in trace.deliveries:
            sender, pd = decode_broad_message(trace.payload)
            views[d.router][sender] = pd
    return views


def broadcast_pds(state: RoutingState, *, simulate: bool = True) -> dict[int, int]:
    """Pseudo-diameter of every router, as every router learns it.

    With ``simulate=False`` the values are read straight from the tables
    (fast path for large networks; skips the broadcast exchange).
    """
    if not simulate:
        return pseudo_diameters(state)
    views = collected_views(state)
    routers = state.topology.routers
    reference = views[routers[0]]
    for r in routers:
        if views[r] != reference or len(views[r]) != len(routers):
            raise UnanimityError(f"router {r} collected {len(views[r])} of {len(routers)} values")
    return dict(sorted(reference.items()))


def build_core_table(pds: Mapping[int, int]) -> CoreTable:
    """Sort ascending by pseudo-diameter, ties by descending router id."""
    return CoreTable(tuple(sorted(pds.items(), key=lambda row: (row[1], -row[0]))))


def select_candidates(table: CoreTable, m: int = 3) -> CandidateCoreSet:
    if not 1 <= m <= len(table):
        raise ValueError(f"m must be between 1 and {len(table)}, got {m}")
    return CandidateCoreSet(tuple(r for r, _ in table.rows[:m]))
