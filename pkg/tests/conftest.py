import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from coverideals import catalog  # noqa: E402
from coverideals.hypergraph import validate  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def hypergraphs(draw, max_n=6, sizes=(2, 3), min_edges=0, max_edges=7):
    n = draw(st.integers(2, max_n))
    raw = draw(st.lists(
        st.sampled_from(sizes).flatmap(
            lambda k: st.sets(st.integers(0, n - 1), min_size=min(k, n), max_size=min(k, n))),
        min_size=min_edges, max_size=max_edges))
    return validate(raw, n)


@st.composite
def graphs(draw, max_n=6, min_edges=0):
    return draw(hypergraphs(max_n=max_n, sizes=(2,), min_edges=min_edges))


@pytest.fixture
def c5():
    return catalog.cycle(5)


@pytest.fixture
def g6():
    return catalog.six_vertex_example()


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[number])
