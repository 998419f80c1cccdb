from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import strategies as st

from milnorgraph.graph import SignedGraph

_criteria: dict[int, tuple[str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    _criteria[mark.args[0]] = ("PASS" if rep.passed else "FAIL", rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        status, secs = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  ({secs:.2f} s)")


def all_slots(l: int):
    loops = [("loop", v) for v in range(1, l + 1)]
    edges = [("edge", i, j, s) for i, j in itertools.combinations(range(1, l + 1), 2) for s in (-1, 1)]
    return loops + edges


def graph_from_slots(l: int, chosen) -> SignedGraph:
    return SignedGraph(
        l,
        [c[1] for c in chosen if c[0] == "loop"],
        [c[1:] for c in chosen if c[0] == "edge"],
    )


@st.composite
def signed_graphs(draw, max_vertices: int = 4, min_hyperplanes: int = 1):
    l = draw(st.integers(1, max_vertices))
    slots = all_slots(l)
    chosen = draw(st.lists(st.sampled_from(slots), unique=True, min_size=min(min_hyperplanes, len(slots))))
    return graph_from_slots(l, chosen)


@st.composite
def transforms(draw, l: int):
    perm = draw(st.permutations(range(1, l + 1)))
    switched = draw(st.sets(st.integers(1, l)))
    return list(perm), switched


def random_graph(rng: random.Random, l: int, density: float = 0.5) -> SignedGraph:
    chosen = [s for s in all_slots(l) if rng.random() < density]
    if not chosen:
        chosen = [("loop", 1)]
    return graph_from_slots(l, chosen)
