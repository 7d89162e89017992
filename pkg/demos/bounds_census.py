"""Spectral-radius, energy and Kirchhoff bounds over every small connected graph.

Reads the graph6 census files under tests/data (one file per order) and
reports, per bound, how often it is tight and whether tightness lines up
with the class of the graph.  Pass a different directory as the first
argument to use another census.
"""

import pathlib
import sys
from collections import Counter

from resreg import analyze, read_graph6_file
from resreg.spectral import BOUND_IDS

data = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "tests" / "data")
orders = range(2, 7)

tight, consistent, labels = Counter(), Counter(), Counter()
gaps = {b: float("inf") for b in BOUND_IDS}
total = 0
for n in orders:
    for _, g in read_graph6_file(data / f"connected{n}.g6"):
        a = analyze(g)
        total += 1
        labels[a.profile.label.kind] += 1
        for e in a.bounds.entries:
            assert e.holds, (g.name, e.id)
            tight[e.id] += e.equality
            consistent[e.id] += e.consistent
            if not e.equality:
                gaps[e.id] = min(gaps[e.id], abs(e.rhs - e.lhs))

print(f"{total} graphs on {orders.start}..{orders.stop - 1} vertices: {dict(labels)}")
print(f"{'bound':<24}{'tight':>7}{'consistent':>12}{'smallest strict gap':>22}")
for b in BOUND_IDS:
    print(f"{b:<24}{tight[b]:>7}{consistent[b]:>12}{gaps[b]:>22.3e}")
