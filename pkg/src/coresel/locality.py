"""Per-sender core choice by estimated end-to-end delay."""

from __future__ import annotations

from dataclasses import dataclass

from .cores import CandidateCoreSet, CoreTable
from .dvr import RoutingState


@dataclass(frozen=True)
class EdEstimate:
    sender: int
    core: int
    cost_to_core: int
    core_pd: int

    @property
    def ed(self) -> int:
        return self.core_pd + self.cost_to_core


def ed(state: RoutingState, table: CoreTable, sender: int, core: int) -> EdEstimate:
    """Sender-to-core cost from the sender's table plus the core's pseudo-diameter."""
    core_pd = table.pd(core)
    return EdEstimate(sender, core, state[sender].cost(core), core_pd)


def select_core(
    state: RoutingState, table: CoreTable, sc: CandidateCoreSet, sender: int
) -> tuple[int, EdEstimate]:
    """Candidate with the smallest ED; ties go to lower pseudo-diameter, then higher id."""
    if not len(sc):
        raise ValueError("empty candidate core set")
    estimates = [ed(state, table, sender, c) for c in sc]
    best = min(estimates, key=lambda e: (e.ed, e.core_pd, -e.core))
    return best.core, best
