"""Theta functions give eigenvectors of the unitary DFT matrix."""

import numpy as np

from thetadft import dft_matrix, eigen_residual, matveev_vector, multiplicities, numerical_multiplicities

np.set_printoptions(precision=4, suppress=True)

# eigenvalues are fourth roots of unity; multiplicities follow floor formulas
print(" n   (+1, -1, +i, -i)   from eigvals")
for n in range(2, 11):
    print(f"{n:2d}  {multiplicities(n).as_tuple()}  {numerical_multiplicities(n).as_tuple()}")

# build G for each eigenvalue i^k at n = 5 and check A G = i^k G
n, x, tau = 5, 0.13 + 0.07j, 0.2 + 1.1j
A = dft_matrix(n)
for k in range(4):
    G = matveev_vector(n, k, x, tau)
    print(f"k={k} eigenvalue {G.eigenvalue}: residual {eigen_residual(A, G):.1e}")
    print("   G =", G.components)

# where the multiplicity is zero the vector collapses to zero
G = matveev_vector(4, 3, x, tau)
print("n=4, k=3 (multiplicity 0): max |G| =", np.abs(G.components).max())

# nu = 2 works the same way, with tau / n^4 inside
G = matveev_vector(6, 1, x, tau, nu=2)
print("n=6, k=1, nu=2 residual:", eigen_residual(dft_matrix(6), G))
