import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from leavittkk.graph import Edge, Graph, graph_from_json  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def graph_from_matrix(rows, prefix="x") -> Graph:
    """Graph with vertices a0, a1, ... and rows[i][j] edges ai -> aj."""
    n = len(rows)
    verts = tuple(f"a{i}" for i in range(n))
    edges = []
    for i in range(n):
        for j in range(n):
            for k in range(rows[i][j]):
                edges.append(Edge(f"{prefix}{i}_{j}_{k}", verts[i], verts[j]))
    return Graph(verts, tuple(edges))


@pytest.fixture
def bi_graph():
    """The two-vertex graph with incidence matrix [[2,1],[1,2]]."""
    return graph_from_matrix([[2, 1], [1, 2]])


@pytest.fixture
def two_cycle():
    return graph_from_json({"vertices": ["a", "b"], "edges": [["x", "a", "b"], ["y", "b", "a"]]})


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
