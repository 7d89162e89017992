"""Resistance distances from a {1}-inverse instead of the pseudoinverse.

Any M with L M L = L gives r_ij = m_ii + m_jj - m_ij - m_ji.  Two block
constructions are shown: one for Laplacians whose off-diagonal block has
columns that are all -1 or all 0 (K_{n,n}, stars), and one built on the
Schur complement of the trailing block (the prism K_n x K_2).
"""

from resreg import laplacian, laplacian_pinv, one_inverse_block_zero, one_inverse_schur
from resreg.families import complete_bipartite, complete_graph
from resreg.graph import cartesian_k2
from resreg.linalg import resistance_from_inverse

n = 3
lap = laplacian(complete_bipartite(n, n))
m = one_inverse_block_zero(lap, n)
print(f"K_{n},{n}: block-zero {{1}}-inverse")
print(m.to_csv(), end="")
print("L M L == L:", lap @ m @ lap == lap)
print("same resistances as L^+:", resistance_from_inverse(m) == resistance_from_inverse(laplacian_pinv(complete_bipartite(n, n))))
print()

prism = cartesian_k2(complete_graph(n))
lap = laplacian(prism)
m = one_inverse_schur(lap, n)
print(f"K_{n} x K_2: Schur-complement {{1}}-inverse, scaled by n^2 (n+2) = {n * n * (n + 2)}")
print((m * (n * n * (n + 2))).to_csv(), end="")
print("L M L == L:", lap @ m @ lap == lap)
r = resistance_from_inverse(m)
print("row sum:", r.row_sums()[0], "(all equal:", len(set(r.row_sums())) == 1, ")")
