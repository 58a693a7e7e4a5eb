from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from gencorona.corona import NeighborhoodPartition  # noqa: E402
from gencorona.graph import Graph, from_edge_list  # noqa: E402
from oracles import decode_prufer  # noqa: E402

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

A, B, C, D, E = range(5)
EXAMPLE1_EDGES = [(A, B), (A, C), (B, C), (B, D), (B, E)]
G3_PARTITION = {B: [[A], [C, E], [D]], C: [[A], [B]]}


def example1() -> Graph:
    return from_edge_list(5, EXAMPLE1_EDGES)


def g3_partition(g: Graph) -> NeighborhoodPartition:
    blocks = {v: [list(g.adjacency[v])] for v in range(g.vertex_count)}
    blocks.update(G3_PARTITION)
    return NeighborhoodPartition.from_blocks(blocks)


@pytest.fixture
def ex1() -> Graph:
    return example1()


@st.composite
def trees(draw: st.DrawFn, min_n: int = 2, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return from_edge_list(n, [(0, 1)] if n == 2 else [])
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return decode_prufer(seq, n)


@st.composite
def partitions(draw: st.DrawFn, g: Graph) -> NeighborhoodPartition:
    family = {}
    for v in range(g.vertex_count):
        nbrs = g.adjacency[v]
        labels = draw(st.lists(st.integers(0, max(len(nbrs) - 1, 0)), min_size=len(nbrs), max_size=len(nbrs)))
        groups: dict[int, list[int]] = {}
        for u, lab in zip(nbrs, labels):
            groups.setdefault(lab, []).append(u)
        family[v] = list(groups.values())
    return NeighborhoodPartition.from_blocks(family)


@st.composite
def coronas_of_trees(draw: st.DrawFn, max_n: int = 7) -> tuple[Graph, NeighborhoodPartition]:
    t = draw(trees(2, max_n))
    return t, draw(partitions(t))


# One line per acceptance criterion, filled by test_acceptance.py and echoed
# in the terminal summary so the verdicts survive output capture.
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter) -> None:
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
