"""Resistance spectra of double graphs, lexicographic products with K2 and prisms.

For an r-regular graph whose resistance row sums are constant, the
spectrum of each product follows from the spectrum of the base graph.
The script builds the product, computes its spectrum directly and prints
the largest gap to the closed form.
"""

from resreg import r_spectrum
from resreg.families import cocktail_party, complete_graph, cycle_graph, figure_graph
from resreg.graph import cartesian_k2, double_graph, lexicographic_k2
from resreg.spectral import (
    complete_cartesian_k2_spectrum,
    complete_cartesian_k2_spectrum_exact,
    double_graph_spectrum,
    lexicographic_k2_spectrum,
    spectra_match,
)

bases = [complete_graph(5), cycle_graph(6), cocktail_party(3), figure_graph("figure1")]
print(f"{'base':<10}{'D2 gap':>12}{'G[K2] gap':>12}{'E(D2)':>12}")
for g in bases:
    d2 = r_spectrum(double_graph(g))
    lex = r_spectrum(lexicographic_k2(g))
    print(f"{g.name:<10}{spectra_match(double_graph_spectrum(g), d2):>12.1e}"
          f"{spectra_match(lexicographic_k2_spectrum(g), lex):>12.1e}{d2.energy:>12.6f}")

print()
for n in range(2, 7):
    exact = complete_cartesian_k2_spectrum_exact(n)
    gap = spectra_match(complete_cartesian_k2_spectrum(n), r_spectrum(cartesian_k2(complete_graph(n))))
    print(f"K{n} x K2:", ", ".join(f"{v}^{m}" for v, m in exact), f"  gap {gap:.1e}")
