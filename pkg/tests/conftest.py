import random

import pytest

from graphlines.graph import Graph, build_graph, reach


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def random_connected(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    """Random spanning tree plus independent extra edges, so always connected."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for k in range(1, n):
        u, v = order[k], order[rng.randrange(k)]
        edges.add((min(u, v), max(u, v)))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    return build_graph(n, sorted(edges))


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@pytest.fixture
def rng():
    return random.Random(20261015)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for row in sorted(ACCEPTANCE, key=lambda r: int(r.split()[1].rstrip(":"))):
            terminalreporter.write_line(row)
