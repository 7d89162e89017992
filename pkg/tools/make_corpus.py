"""Write tests/data/connected{n}.g6: every connected graph on n vertices, n = 1..7.

Source is the networkx graph atlas (all graphs up to 7 vertices, one per
isomorphism class).  Run once; the files are committed.
"""

import pathlib

import networkx as nx

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    by_n = {}
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() and nx.is_connected(g):
            by_n.setdefault(g.number_of_nodes(), []).append(g)
    for n, graphs in sorted(by_n.items()):
        lines = [nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs]
        (OUT / f"connected{n}.g6").write_text("\n".join(lines) + "\n")
        print(n, len(lines))


if __name__ == "__main__":
    main()
