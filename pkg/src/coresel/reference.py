"""Published values for the eight-router worked example and a checker for them.

Everything is keyed by router label so the checker can run against any
topology that labels its routers A..H.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cores import broadcast_pds, build_core_table, select_candidates
from .dvr import compute_dvr, equal_cost_next_hops
from .locality import ed, select_core
from .topology import Topology, diameter

# owner -> dest -> (next hop, cost)
ROUTING_TABLES: dict[str, dict[str, tuple[str, int]]] = {
    "A": {"A": ("A", 0), "B": ("B", 30), "C": ("C", 40), "D": ("B", 60),
          "E": ("C", 60), "F": ("C", 90), "G": ("C", 80), "H": ("C", 80)},
    "B": {"A": ("A", 30), "B": ("B", 0), "C": ("A", 70), "D": ("D", 30),
          "E": ("E", 50), "F": ("E", 90), "G": ("D", 50), "H": ("E", 70)},
    "C": {"A": ("A", 40), "B": ("A", 70), "C": ("C", 0), "D": ("E", 60),
          "E": ("E", 20), "F": ("F", 50), "G": ("E", 40), "H": ("E", 40)},
    "D": {"A": ("B", 60), "B": ("B", 30), "C": ("G", 60), "D": ("D", 0),
          "E": ("G", 40), "F": ("G", 80), "G": ("G", 20), "H": ("G", 60)},
    "E": {"A": ("C", 60), "B": ("B", 50), "C": ("C", 20), "D": ("G", 40),
          "E": ("E", 0), "F": ("H", 40), "G": ("G", 20), "H": ("H", 20)},
    "F": {"A": ("C", 90), "B": ("H", 90), "C": ("C", 50), "D": ("H", 80),
          "E": ("H", 40), "F": ("F", 0), "G": ("H", 60), "H": ("H", 20)},
    "G": {"A": ("E", 80), "B": ("D", 50), "C": ("E", 40), "D": ("D", 20),
          "E": ("E", 20), "F": ("E", 60), "G": ("G", 0), "H": ("E", 40)},
    "H": {"A": ("E", 80), "B": ("E", 70), "C": ("E", 40), "D": ("E", 60),
          "E": ("E", 20), "F": ("F", 20), "G": ("E", 40), "H": ("H", 0)},
}

PSEUDO_DIAMETERS = {"A": 90, "B": 90, "C": 70, "D": 80, "E": 60, "F": 90, "G": 80, "H": 80}
CORE_ORDER = ["E", "C", "H", "G", "D", "F", "B", "A"]
CANDIDATES = ["E", "C", "H"]
NETWORK_DIAMETER = 90
SENDER = "A"
SENDER_EDS = {"E": 120, "C": 110, "H": 160}
SENDER_CHOICE = "C"


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def reproduce(t: Topology) -> list[CheckResult]:
    """Recompute the worked example on ``t`` and compare with the published values."""
    try:
        ids = {label: t.resolve(label) for label in PSEUDO_DIAMETERS}
    except KeyError as exc:
        return [CheckResult("labels", False, str(exc))]
    lab = t.label
    results = []

    state = compute_dvr(t)
    bad_cost, bad_next, ambiguous = [], [], 0
    for owner, rows in ROUTING_TABLES.items():
        table = state[ids[owner]]
        for dest, (nxt, cost) in rows.items():
            entry = table[ids[dest]]
            if entry.cost != cost:
                bad_cost.append(f"{owner}->{dest}: {entry.cost} != {cost}")
            if len(equal_cost_next_hops(state, ids[owner], ids[dest])) > 1:
                ambiguous += 1
            elif lab(entry.next) != nxt:
                bad_next.append(f"{owner}->{dest}: via {lab(entry.next)} != {nxt}")
    if len(t) != len(ids):
        bad_cost.append(f"topology has {len(t)} routers, expected {len(ids)}")
    results.append(CheckResult("routing-table-costs", not bad_cost, "; ".join(bad_cost)))
    results.append(CheckResult(
        "routing-table-next-hops", not bad_next,
        "; ".join(bad_next) or f"{ambiguous} equal-cost entries compared on cost only",
    ))

    dia = diameter(t)
    results.append(CheckResult("diameter", dia == NETWORK_DIAMETER, f"{dia}"))

    pds = broadcast_pds(state)
    got = {label: pds[r] for label, r in ids.items()}
    results.append(CheckResult("pseudo-diameters", got == PSEUDO_DIAMETERS, _fmt(got)))

    table = build_core_table(pds)
    order = [lab(r) for r in table.routers]
    results.append(CheckResult("core-table-order", order == CORE_ORDER, " ".join(order)))

    sc = select_candidates(table, len(CANDIDATES))
    cands = [lab(r) for r in sc]
    results.append(CheckResult("candidate-set", cands == CANDIDATES, " ".join(cands)))

    sender = ids[SENDER]
    eds = {label: ed(state, table, sender, ids[label]).ed for label in SENDER_EDS}
    results.append(CheckResult("sender-eds", eds == SENDER_EDS, _fmt(eds)))
    chosen, _ = select_core(state, table, sc, sender)
    results.append(CheckResult("sender-choice", lab(chosen) == SENDER_CHOICE, lab(chosen)))
    return results


def _fmt(d: dict[str, int]) -> str:
    return " ".join(f"{k}={v}" for k, v in d.items())
