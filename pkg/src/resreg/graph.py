"""Simple undirected graphs and the three products with K2.

Vertices are ``0..n-1``.  A :class:`Graph` is immutable; every constructor
returns a new one.  Connectivity is *not* required here, it is checked by
the analysis entry points (resistance distance is undefined across
components).
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

import numpy as np


class GraphError(ValueError):
    """Invalid graph data (bad vertex, self-loop, duplicate edge, ...)."""


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple = ()
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be >= 1, got {self.n}")
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} has endpoint outside 0..{self.n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, label=None, one_based=False):
        off = 1 if one_based else 0
        return cls(n, tuple((u - off, v - off) for u, v in edges), label)

    @property
    def m(self) -> int:
        return len(self.edges)

    def relabel(self, label):
        return Graph(self.n, self.edges, label)

    def neighbors(self) -> list:
        """Adjacency lists, sorted."""
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for a in adj:
            a.sort()
        return adj

    def degrees(self) -> list:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def regularity(self) -> Optional[int]:
        """Common degree if the graph is regular, else None."""
        deg = set(self.degrees())
        return deg.pop() if len(deg) == 1 else None

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def has_edge(self, u, v) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=int)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def is_connected(self) -> bool:
        adj = self.neighbors()
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def require_connected(self, min_order=1):
        if self.n < min_order:
            raise GraphError(f"need at least {min_order} vertices, got {self.n}")
        if not self.is_connected():
            raise DisconnectedGraphError(f"graph {self.name} is not connected")

    @property
    def name(self) -> str:
        return self.label or f"<n={self.n}, m={self.m}>"

    def __repr__(self):
        lab = f", label={self.label!r}" if self.label else ""
        return f"Graph(n={self.n}, m={self.m}{lab})"


def distance_matrix(g: Graph) -> np.ndarray:
    """Shortest-path distances by BFS; -1 marks unreachable pairs."""
    adj = g.neighbors()
    d = np.full((g.n, g.n), -1, dtype=int)
    for s in range(g.n):
        d[s, s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if d[s, w] < 0:
                        d[s, w] = d[s, u] + 1
                        nxt.append(w)
            frontier = nxt
    return d


# --- products with K2 -------------------------------------------------------
#
# All three place vertex (v, a) at index v + a*n so the two fibres form the
# two diagonal blocks of any vertex-indexed matrix.

def double_graph(g: Graph) -> Graph:
    """Double graph D2G: copy v' of v is joined to every neighbour of v."""
    n = g.n
    edges = []
    for u, v in g.edges:
        edges += [(u, v), (u + n, v + n), (u, v + n), (v, u + n)]
    return Graph(2 * n, tuple(edges), f"D2({g.name})")


def lexicographic_k2(g: Graph) -> Graph:
    """G[K2]: each vertex blown up into an edge, fibres fully joined along E(G)."""
    n = g.n
    edges = [(v, v + n) for v in range(n)]
    for u, v in g.edges:
        edges += [(u, v), (u + n, v + n), (u, v + n), (v, u + n)]
    return Graph(2 * n, tuple(edges), f"{g.name}[K2]")


def cartesian_k2(g: Graph) -> Graph:
    """G x K2 (prism over G)."""
    n = g.n
    edges = [(v, v + n) for v in range(n)]
    for u, v in g.edges:
        edges += [(u, v), (u + n, v + n)]
    return Graph(2 * n, tuple(edges), f"{g.name}xK2")


PRODUCTS = {
    "double": double_graph,
    "lexicographic_k2": lexicographic_k2,
    "cartesian_k2": cartesian_k2,
}
