"""Degree-based topological indices, exact integer arithmetic."""
from __future__ import annotations

from findex.graph import Graph


def f_index(g: Graph) -> int:
    """Forgotten index: sum of cubed vertex degrees."""
    return sum(d ** 3 for d in g.degrees)


def f_index_edge_form(g: Graph) -> int:
    """Sum over edges uv of d(u)^2 + d(v)^2.

    Agrees with :func:`f_index` whenever ``g`` has no isolated vertices.
    """
    d = g.degrees
    return sum(d[u] ** 2 + d[v] ** 2 for u, v in g.edges())


def first_zagreb(g: Graph) -> int:
    return sum(d * d for d in g.degrees)
