import random
from itertools import combinations

import pytest
from hypothesis import assume, strategies as st

from randic_incidence.graph import Graph, random_connected_graph, random_graph

ACCEPTANCE_LINES = []


@st.composite
def graphs(draw, min_n=0, max_n=10, connected=False, min_m=0):
    """Hypothesis strategy for canonical simple graphs."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if connected and n > 0:
        seed = draw(st.integers(0, 2**32 - 1))
        g = random_connected_graph(n, random.Random(seed), p=draw(st.floats(0, 1)))
    else:
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        g = Graph(n, tuple(e for e, keep in zip(pairs, mask) if keep))
    assume(g.m >= min_m)
    return g


def random_corpus(count, seed, n_range=(1, 12), connected=False):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(*n_range)
        out.append(random_connected_graph(n, rng) if connected else random_graph(n, rng.random(), rng))
    return out


@pytest.fixture(scope="session")
def corpus100():
    return random_corpus(100, 2024)


@pytest.fixture(scope="session")
def connected_corpus():
    return random_corpus(100, 77, (2, 10), connected=True)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
