import random

import pytest
from hypothesis import strategies as st

from rexlab.graph import Graph


@st.composite
def graphs(draw, min_order=0, max_order=8):
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    # never touch the user's real cache from tests
    monkeypatch.setenv("REXLAB_CACHE", str(tmp_path / "rex.jsonl"))


def naive_copies(h: Graph, g: Graph) -> int:
    """Copies of h in g by brute force: edge sets of all injective maps, deduplicated."""
    from itertools import permutations

    he = h.edges()
    seen = set()
    for image in permutations(range(g.order), h.order):
        if all(g.has_edge(image[u], image[v]) for u, v in he):
            seen.add((frozenset(frozenset((image[u], image[v])) for u, v in he),
                      frozenset(image)))
    return len(seen)


# PASS/FAIL lines from test_acceptance, echoed at the end of the run
ACCEPTANCE: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
