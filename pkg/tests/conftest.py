import json
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from forcinglab.graph import Graph, build_graph

# one shared CPU makes wall-clock deadlines flaky
settings.register_profile("lab", deadline=None)
settings.load_profile("lab")

DATA = Path(__file__).parent / "data"
ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    # random spanning tree first, then extra edges
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges |= {e for e, k in zip(pairs, keep) if k}
    return build_graph(n, sorted(edges))


@pytest.fixture(scope="session")
def oracle_rows() -> list[dict]:
    return json.loads((DATA / "oracle_values.json").read_text())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
