"""Standard graph families and three named example graphs (figure1..figure3).

Vertex numbering:

* complete, cycle, path: natural order ``0..n-1`` (cycle edges ``i ~ i+1``).
* complete multipartite / bipartite: parts are contiguous index ranges.
* cocktail party ``CP(2p)``: ``2i`` and ``2i+1`` are the non-adjacent partners.
"""

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError

FAMILIES = ("complete", "cycle", "path", "bipartite", "multipartite", "cocktail")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}; known: {', '.join(FAMILIES)}")
        if not self.params or any(int(p) != p or p < 1 for p in self.params):
            raise GraphError(f"{self.family}: size parameters must be integers >= 1, got {self.params}")
        arity = _ARITY.get(self.family)
        if arity is not None and len(self.params) != arity:
            raise GraphError(f"{self.family} takes {arity} parameter(s), got {len(self.params)}")


_ARITY = {"complete": 1, "cycle": 1, "path": 1, "cocktail": 1, "bipartite": 2}


def complete_graph(n):
    return Graph(n, tuple(combinations(range(n), 2)), f"K{n}")


def cycle_graph(n):
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)), f"C{n}")


def path_graph(n):
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), f"P{n}")


def complete_multipartite(parts):
    parts = list(parts)
    if not parts or any(p < 1 for p in parts):
        raise GraphError(f"part sizes must be >= 1, got {parts}")
    owner = [k for k, size in enumerate(parts) for _ in range(size)]
    edges = tuple((u, v) for u, v in combinations(range(len(owner)), 2) if owner[u] != owner[v])
    return Graph(len(owner), edges, "K" + ",".join(map(str, parts)))


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise GraphError(f"complete bipartite needs a, b >= 1, got ({a}, {b})")
    return complete_multipartite([a, b]).relabel(f"K{a},{b}")


def cocktail_party(p):
    """CP(2p) = K_{2,...,2} with p parts."""
    return complete_multipartite([2] * p).relabel(f"CP({2 * p})")


def generate(spec: FamilySpec) -> Graph:
    f, args = spec.family, spec.params
    if f == "complete":
        return complete_graph(*args)
    if f == "cycle":
        return cycle_graph(*args)
    if f == "path":
        return path_graph(*args)
    if f == "bipartite":
        return complete_bipartite(*args)
    if f == "multipartite":
        return complete_multipartite(args)
    return cocktail_party(*args)


# 1-based edge lists: figure1 and figure2 are 4- and 3-regular with constant
# resistance row sums, figure3 is 4-regular without them.
FIGURE_EDGES = {
    # 4-regular, 4-resistance regular, 9 vertices
    "figure1": (9, [(6, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 8), (8, 1), (1, 9),
                    (9, 5), (2, 7), (7, 6), (7, 3), (3, 8), (8, 4), (4, 9), (7, 5), (2, 9)]),
    # 3-regular, resistance regular but not distance regular, 6 vertices
    "figure2": (6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4), (2, 6), (3, 5)]),
    # 4-regular but not resistance regular, 9 vertices
    "figure3": (9, [(6, 1), (1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6), (6, 7), (7, 8),
                    (8, 9), (9, 3), (3, 8), (8, 2), (2, 5), (6, 4), (4, 9), (9, 7), (7, 5)]),
}


def figure_graph(name):
    n, edges = FIGURE_EDGES[name]
    return Graph.from_edges(n, edges, label=name, one_based=True)


def parse_family(text: str) -> Graph:
    """Build a graph from ``family:a,b,...`` (e.g. ``cocktail:3``) or a figure name."""
    text = text.strip().lower()
    if text in FIGURE_EDGES:
        return figure_graph(text)
    family, _, rest = text.partition(":")
    try:
        params = tuple(int(x) for x in rest.split(",") if x.strip())
    except ValueError:
        raise GraphError(f"bad family parameters in {text!r}") from None
    return generate(FamilySpec(family, params))
