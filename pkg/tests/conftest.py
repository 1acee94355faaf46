import random

import pytest
from hypothesis import strategies as st

from coresel import compute_dvr, random_topology, reference_topology
from coresel.topology import Topology

CORPUS_SIZE = 200
CORPUS_SEED = 20140301


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): exit criterion reported in the summary")
    config._acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        item.config._acceptance.append((marker.args[0], report.passed))


def pytest_terminal_summary(terminalreporter, config):
    rows = config._acceptance
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in rows:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")


@pytest.fixture(scope="session")
def fixture_topo():
    return reference_topology()


@pytest.fixture(scope="session")
def fixture_state(fixture_topo):
    return compute_dvr(fixture_topo)


@pytest.fixture(scope="session")
def L(fixture_topo):
    """Label -> router id for the reference network."""
    return {fixture_topo.label(r): r for r in fixture_topo.routers}


@pytest.fixture(scope="session")
def corpus():
    """Seeded random connected graphs, n in [2, 50], costs in [1, 100], with converged state."""
    rng = random.Random(CORPUS_SEED)
    graphs = []
    for _ in range(CORPUS_SIZE):
        t = random_topology(rng.randint(2, 50), rng, max_cost=100)
        graphs.append((t, compute_dvr(t)))
    return graphs


@st.composite
def topologies(draw, min_n=1, max_n=12, max_cost=20):
    n = draw(st.integers(min_n, max_n))
    ids = draw(st.lists(st.integers(0, 2**32 - 1), min_size=n, max_size=n, unique=True))
    links = {}
    for i in range(1, n):
        j = draw(st.integers(0, i - 1))
        links[(ids[i], ids[j])] = draw(st.integers(1, max_cost))
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    for i, j in extra:
        a, b = ids[i], ids[j]
        if a != b and (a, b) not in links and (b, a) not in links:
            links[(a, b)] = draw(st.integers(1, max_cost))
    return Topology(ids, [(a, b, c) for (a, b), c in links.items()])
