import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from netimbalance import graph as gen  # noqa: E402
from netimbalance.metric import QoSProfile  # noqa: E402


@st.composite
def graphs(draw, min_n=2, max_n=30):
    """Random simple graphs: arbitrary edge subsets or one of the random models."""
    n = draw(st.integers(min_n, max_n))
    kind = draw(st.sampled_from(["subset", "er", "ba", "ws"]))
    seed = draw(st.integers(0, 2**32))
    if kind == "er":
        return gen.erdos_renyi(n, draw(st.floats(0.0, 1.0)), seed)
    if kind == "ba" and n >= 2:
        return gen.barabasi_albert(n, draw(st.integers(1, n - 1)), seed)
    if kind == "ws" and n >= 3:
        k = 2 * draw(st.integers(1, (n - 1) // 2))
        return gen.watts_strogatz(n, k, draw(st.floats(0.0, 1.0)), seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return gen.from_edges(n, chosen)


profiles = st.builds(
    QoSProfile,
    a=st.floats(0.05, 20.0),
    h0=st.floats(0.1, 12.0),
)


@pytest.fixture
def c8():
    return gen.ring(8)


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance_log.LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
