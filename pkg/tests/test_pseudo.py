import heapq

from hypothesis import given, settings

from coresel import apsp_oracle, compute_dvr, diameter, pd_broadcast, pseudo_diameter
from coresel.pseudo import pseudo_diameters
from coresel.topology import Topology

from conftest import topologies


def spt_distances(t, root):
    """Plain Dijkstra over the link list; test-local oracle."""
    adj = {r: [] for r in t.routers}
    for lk in t.links:
        adj[lk.a].append((lk.b, lk.cost))
        adj[lk.b].append((lk.a, lk.cost))
    best = {}
    heap = [(0, root)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in best:
            continue
        best[u] = d
        for v, c in adj[u]:
            if v not in best:
                heapq.heappush(heap, (d + c, v))
    return best


def test_fixture_pseudo_diameters(fixture_state, fixture_topo, L):
    pds = {fixture_topo.label(r): v for r, v in pseudo_diameters(fixture_state).items()}
    assert pds == {"A": 90, "B": 90, "C": 70, "D": 80, "E": 60, "F": 90, "G": 80, "H": 80}
    assert pseudo_diameter(fixture_state[L["A"]]).value == 90
    assert pseudo_diameter(fixture_state[L["E"]]).value == 60


def test_single_router_pd_and_broadcast():
    state = compute_dvr(Topology([4], []))
    assert pseudo_diameter(state[4]).value == 0
    trace = pd_broadcast(state, 4, b"hello")
    assert [(d.router, d.path, d.remaining) for d in trace.deliveries] == [(4, (4,), 0)]
    assert trace.payload == b"hello"


def test_broadcast_from_c(fixture_state, fixture_topo, L):
    trace = pd_broadcast(fixture_state, L["C"], b"x")
    assert trace.budget == 70
    assert sorted(trace.delivered) == sorted(fixture_topo.routers)
    # B is 70 from C: the whole budget is consumed (C-A-B and C-E-B tie at 40+30 / 20+50)
    to_b = trace.delivery(L["B"])
    assert to_b.spent == 70 and to_b.remaining == 0
    assert to_b.decrements in ((40, 30), (20, 50))
    oracle = spt_distances(fixture_topo, L["C"])
    assert max(oracle.values()) <= 70
    for d in trace.deliveries:
        assert d.spent == oracle[d.router]


def test_broadcast_from_e(fixture_state, fixture_topo, L):
    trace = pd_broadcast(fixture_state, L["E"])
    assert sorted(trace.delivered) == sorted(fixture_topo.routers)
    far = max(trace.deliveries, key=lambda d: d.spent)
    assert far.spent == 60 and far.router == L["A"]
    oracle = spt_distances(fixture_topo, L["E"])
    assert all(d.spent == oracle[d.router] for d in trace.deliveries)


def test_broadcast_is_deterministic(fixture_state, L):
    assert pd_broadcast(fixture_state, L["D"], b"p") == pd_broadcast(fixture_state, L["D"], b"p")


def test_rpf_drops_off_tree_copies():
    # Unit triangle 1-2-3 with a tail 3-4, so P_d(1) = 2 leaves budget for 2 and 3
    # to offer each other a copy; neither is the other's reverse-path neighbour.
    state = compute_dvr(Topology([1, 2, 3, 4], [(1, 2, 1), (2, 3, 1), (1, 3, 1), (3, 4, 1)]))
    trace = pd_broadcast(state, 1)
    assert trace.delivered == [1, 2, 3, 4]
    assert trace.rejected == 2


def check_broadcast(t, state):
    pds = pseudo_diameters(state)
    for src in t.routers:
        trace = pd_broadcast(state, src)
        assert sorted(trace.delivered) == list(t.routers)
        for d in trace.deliveries:
            assert sum(d.decrements) <= pds[src]
            assert d.remaining == pds[src] - d.spent
            assert (d.spent == pds[src]) == (state[src].cost(d.router) == pds[src])


@settings(max_examples=100, deadline=None)
@given(topologies(max_n=12))
def test_broadcast_properties(t):
    check_broadcast(t, compute_dvr(t))


@settings(max_examples=100, deadline=None)
@given(topologies())
def test_pd_bounded_by_diameter(t):
    state = compute_dvr(t)
    pds = pseudo_diameters(state)
    dia = diameter(t)
    assert all(v <= dia for v in pds.values())
    assert max(pds.values()) == dia
    dist = apsp_oracle(t)
    assert pds == {r: max(dist[r].values()) for r in t.routers}
