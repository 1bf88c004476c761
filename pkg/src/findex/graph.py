"""Small simple undirected graphs on vertices 0..n-1.

Graphs are immutable values. Every rewrite returns a new graph, which keeps
them hashable and safe to hand to worker processes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graph construction or a failed precondition."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        out = []
        for nbrs in self.adj:
            m = 0
            for v in nbrs:
                m |= 1 << v
            out.append(m)
        return tuple(out)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def leaves_of(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` that have degree one."""
        return tuple(w for w in self.adj[v] if len(self.adj[w]) == 1)

    def rewire(self, remove: Iterable[tuple[int, int]] = (),
               add: Iterable[tuple[int, int]] = ()) -> "Graph":
        """Return a copy with the ``remove`` edges deleted and ``add`` edges inserted."""
        es = {frozenset(e) for e in self.edges()}
        for u, v in remove:
            e = frozenset((u, v))
            if e not in es:
                raise GraphError(f"edge {u}-{v} not present")
            es.discard(e)
        for u, v in add:
            es.add(frozenset((u, v)))
        return make_graph(self.n, [tuple(e) for e in es])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertices")
        return make_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n!r}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def from_masks(n: int, masks: Sequence[int]) -> Graph:
    return Graph(n, tuple(tuple(v for v in range(n) if (m >> v) & 1) for m in masks))


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    return make_graph(n, [(0, i) for i in range(1, n)])


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees, reverse=True))


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    masks = g.masks
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def is_unicyclic(g: Graph) -> bool:
    return g.edge_count == g.n and is_connected(g)


def two_core(g: Graph) -> set[int]:
    """Vertices left after stripping degree-<=1 vertices to a fixpoint."""
    deg = list(g.degrees)
    alive = set(range(g.n))
    stack = [v for v in range(g.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return alive


def cycle_of(g: Graph) -> list[int]:
    """Vertices of the unique cycle of a unicyclic graph, in traversal order.

    Traversal starts at the smallest cycle vertex and proceeds toward its
    smaller cycle neighbor.
    """
    if not is_unicyclic(g):
        raise GraphError("cycle_of requires a unicyclic graph")
    core = two_core(g)
    start = min(core)
    order = [start]
    prev, cur = start, min(w for w in g.adj[start] if w in core)
    while cur != start:
        order.append(cur)
        nxt = [w for w in g.adj[cur] if w in core and w != prev]
        prev, cur = cur, nxt[0]
    return order


def girth(g: Graph) -> int:
    """Length of the unique cycle (unicyclic graphs only)."""
    return len(cycle_of(g))
