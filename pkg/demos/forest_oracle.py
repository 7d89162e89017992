"""Resistance distances by counting spanning trees and spanning 2-forests.

r_ij is the number of 2-forests separating i from j divided by the number
of spanning trees.  No linear algebra is involved, which makes it a useful
independent check on the exact pseudoinverse route.
"""

import random
import time

from resreg import oracle_resistance, resistance_matrix
from resreg.families import complete_graph, cycle_graph
from resreg.graph import Graph
from resreg.oracle import count_structures

for g in (complete_graph(3), cycle_graph(4), complete_graph(5)):
    c = count_structures(g)
    print(f"{g.name}: {c.trees} spanning trees, {c.sep[0][1]} forests split 0|1 -> r01 = "
          f"{oracle_resistance(g)[0, 1]}")

rng = random.Random(1)
start, agree = time.perf_counter(), 0
for _ in range(50):
    edges = {(rng.randrange(v), v) for v in range(1, 7)}
    edges |= {(u, v) for v in range(7) for u in range(v) if rng.random() < 0.35}
    g = Graph(7, tuple(edges))
    agree += oracle_resistance(g) == resistance_matrix(g)
print(f"random 7-vertex graphs: {agree}/50 agree ({time.perf_counter() - start:.2f}s)")
