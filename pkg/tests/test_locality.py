import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coresel import (
    broadcast_pds,
    build_core_table,
    compute_dvr,
    ed,
    select_candidates,
    select_core,
)
from coresel.cores import CandidateCoreSet, CoreTable
from coresel.reference import PSEUDO_DIAMETERS, ROUTING_TABLES
from coresel.topology import Topology

from conftest import topologies


@pytest.fixture(scope="module")
def core_table(fixture_state):
    return build_core_table(broadcast_pds(fixture_state))


def test_ed_sender_a(fixture_state, core_table, L):
    assert ed(fixture_state, core_table, L["A"], L["E"]).ed == 120
    assert ed(fixture_state, core_table, L["A"], L["C"]).ed == 110
    est = ed(fixture_state, core_table, L["A"], L["H"])
    assert (est.cost_to_core, est.core_pd, est.ed) == (80, 80, 160)


def test_ed_sender_is_core(fixture_state, core_table, L):
    est = ed(fixture_state, core_table, L["G"], L["G"])
    assert est.cost_to_core == 0 and est.ed == 80


def test_ed_unknown(fixture_state, core_table, L):
    with pytest.raises(KeyError):
        ed(fixture_state, core_table, 99, L["E"])
    with pytest.raises(KeyError):
        ed(fixture_state, CoreTable(((L["E"], 60),)), L["A"], L["C"])


def test_select_core_sender_a(fixture_state, core_table, L):
    sc = select_candidates(core_table, 3)
    core, est = select_core(fixture_state, core_table, sc, L["A"])
    assert core == L["C"] and est.ed == 110


def test_select_core_sender_e(fixture_state, core_table, L):
    # enumerate from the published table of E and the published pseudo-diameters
    enumerated = {c: PSEUDO_DIAMETERS[c] + ROUTING_TABLES["E"][c][1] for c in "ECH"}
    assert enumerated == {"E": 60, "C": 90, "H": 100}
    best = min(enumerated, key=enumerated.get)
    core, est = select_core(fixture_state, core_table, select_candidates(core_table, 3), L["E"])
    assert core == L[best] and est.ed == 60


def test_single_candidate_always_chosen(fixture_state, core_table, L):
    sc = select_candidates(core_table, 1)
    for sender in L.values():
        assert select_core(fixture_state, core_table, sc, sender)[0] == L["E"]


def test_empty_candidate_set_rejected():
    with pytest.raises(ValueError):
        CandidateCoreSet(())


def test_ed_tie_prefers_lower_pd():
    # path 1-2-3-4, unit costs; pds 3, 2, 2, 3
    state = compute_dvr(Topology([1, 2, 3, 4], [(1, 2, 1), (2, 3, 1), (3, 4, 1)]))
    table = build_core_table(broadcast_pds(state))
    # sender 1: core 1 -> 0 + 3, core 2 -> 1 + 2
    assert select_core(state, table, CandidateCoreSet((1, 2)), 1)[0] == 2


def test_ed_tie_then_prefers_higher_id():
    # star centred on 1: leaves 2 and 3 both have ED 1 + 2 from the centre
    state = compute_dvr(Topology([1, 2, 3], [(1, 2, 1), (1, 3, 1)]))
    table = build_core_table(broadcast_pds(state))
    assert select_core(state, table, CandidateCoreSet((2, 3)), 1)[0] == 3


def brute_force_choice(state, table, cores, sender):
    best = None
    for c in cores:
        key = (table.pd(c) + state[sender].cost(c), table.pd(c), -c)
        if best is None or key < best[0]:
            best = (key, c)
    return best[1]


@settings(max_examples=80, deadline=None)
@given(topologies(max_n=12), st.data())
def test_select_core_matches_enumeration(t, data):
    state = compute_dvr(t)
    table = build_core_table(broadcast_pds(state, simulate=False))
    m = data.draw(st.integers(1, len(t)))
    sc = select_candidates(table, m)
    for sender in t.routers:
        core, est = select_core(state, table, sc, sender)
        assert core == brute_force_choice(state, table, sc.cores, sender)
        assert est.ed == est.core_pd + est.cost_to_core
        for g in t.routers:
            assert state[sender].cost(core) + state[core].cost(g) <= est.ed
