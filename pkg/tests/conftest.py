import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from isolation_kit.graph import make_graph  # noqa: E402
from isolation_kit.harness import enumerate_connected_upto  # noqa: E402
from isolation_kit.patterns import builtin_pattern  # noqa: E402

# filled by test_acceptance, printed once at the end of the session
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, keep in zip(pairs, chosen) if keep])


@pytest.fixture(scope="session")
def corpus7():
    return enumerate_connected_upto(7)


@pytest.fixture
def p3():
    return builtin_pattern("p3")


@pytest.fixture
def k3():
    return builtin_pattern("k3")
