import itertools
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from monocover.graph import ColouredGraph, Mask  # noqa: E402


@st.composite
def coloured_graphs(draw, max_n=10, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    masks = draw(st.lists(st.sampled_from([0, 1, 2, 3]), min_size=len(pairs), max_size=len(pairs)))
    return ColouredGraph(n, tuple((u, v, Mask(c)) for (u, v), c in zip(pairs, masks) if c))


def path_graph(length, mask=Mask.RED, n=None):
    n = length + 1 if n is None else n
    return ColouredGraph(n, tuple((i, i + 1, mask) for i in range(length)))


@pytest.fixture
def red_triangle():
    return ColouredGraph(3, ((0, 1, Mask.RED), (1, 2, Mask.RED), (0, 2, Mask.RED)))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
