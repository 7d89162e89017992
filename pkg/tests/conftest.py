import functools
import pathlib
import random

import pytest
from hypothesis import strategies as st

from resreg.formats import read_graph6_file
from resreg.graph import Graph

DATA = pathlib.Path(__file__).parent / "data"


@functools.lru_cache(maxsize=None)
def corpus(n):
    """All connected graphs on n vertices (one per isomorphism class)."""
    return tuple(g for _, g in read_graph6_file(DATA / f"connected{n}.g6"))


def corpus_upto(n, start=2):
    return [g for k in range(start, n + 1) for g in corpus(k)]


def random_connected_graph(n, rng, p=0.5, label=None):
    """Random spanning tree plus each remaining pair with probability p."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for v in range(n):
        for u in range(v):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph(n, tuple(edges), label)


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    edges = {(p, v) for p, v in zip(parents, range(1, n))}
    extra = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    edges |= {e for e, keep in zip(pairs, extra) if keep}
    return Graph(n, tuple(edges))


@pytest.fixture
def rng():
    return random.Random(20240601)


# -- acceptance summary ------------------------------------------------------

_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        status = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
