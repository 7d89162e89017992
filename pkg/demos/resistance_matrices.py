"""Exact resistance matrices and what the row sums say about a graph.

Three 9- and 6-vertex regular graphs: two whose resistance row sums all
agree and one that is regular in the ordinary sense but not in the
resistance sense.

    python demos/resistance_matrices.py
"""

from resreg import figure_graph, profile, resistance_matrix


def show(name):
    g = figure_graph(name)
    p = profile(g)
    print(f"{name}: n={g.n}, m={g.m}, degree {g.regularity()}")
    width = max(len(str(x)) for row in p.R.tolist() for x in row)
    for row in p.R.tolist():
        print("   ", " ".join(f"{str(x):>{width}}" for x in row))
    print("    row sums:", ", ".join(sorted({str(x) for x in p.rdeg})))
    print("    label:   ", p.label)
    print()


for name in ("figure2", "figure1", "figure3"):
    show(name)

# both are 4-regular on 9 vertices; only one has constant resistance row sums
a, b = resistance_matrix(figure_graph("figure1")), resistance_matrix(figure_graph("figure3"))
print("figure1 row sums", sorted(map(str, set(a.row_sums()))))
print("figure3 row sums", sorted(map(str, set(b.row_sums()))))
