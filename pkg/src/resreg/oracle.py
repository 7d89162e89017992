"""Brute-force resistance distances from spanning trees and spanning 2-forests.

With T spanning trees and F_ij spanning 2-forests separating i from j,
r_ij = F_ij / T.  Everything here is counting over edge subsets with a
component check; nothing is shared with the linear algebra in
:mod:`resreg.linalg`, which is the point.
"""

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .linalg import RationalMatrix

MAX_EDGES = 24


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ForestCounts:
    trees: int
    sep: tuple  # sep[i][j] = number of 2-forests with i and j in different trees


def count_structures(g: Graph, max_edges=MAX_EDGES) -> ForestCounts:
    g.require_connected()
    if g.m > max_edges:
        raise BudgetExceeded(f"{g.name}: {g.m} edges exceeds enumeration budget {max_edges}")
    n, edges = g.n, g.edges
    m = len(edges)
    sep = [[0] * n for _ in range(n)]
    trees = 0

    # Depth-first walk over edge subsets in index order.  An edge joining two
    # vertices of the same component would close a cycle, so that subset and
    # all its supersets are skipped.  comp[v] is the component id of v.
    def walk(start, size, comp):
        nonlocal trees
        if size == n - 2:
            for i in range(n):
                for j in range(n):
                    if comp[i] != comp[j]:
                        sep[i][j] += 1
        elif size == n - 1:
            trees += 1
            return
        for e in range(start, m):
            u, v = edges[e]
            cu, cv = comp[u], comp[v]
            if cu == cv:
                continue
            walk(e + 1, size + 1, tuple(cu if c == cv else c for c in comp))

    if n == 1:
        return ForestCounts(1, ((0,),))
    walk(0, 0, tuple(range(n)))
    return ForestCounts(trees, tuple(tuple(r) for r in sep))


def oracle_resistance(g: Graph) -> RationalMatrix:
    c = count_structures(g)
    return RationalMatrix([[Fraction(f, c.trees) for f in row] for row in c.sep])
