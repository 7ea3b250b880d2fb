"""The integer-lattice layer: Smith normal form and abelian invariants.

Everything runs over Z with exact arbitrary-precision arithmetic, so the
unimodular transforms can be checked by plain matrix multiplication.
"""

from isoprod import IntMatrix, abelian_invariants, kernel_basis_mod_p, smith_normal_form

A = IntMatrix([
    [2, 4, 4],
    [-6, 6, 12],
    [10, 4, 16],
])
D, U, V = smith_normal_form(A)
print("A =", A.data)
print("D =", D.data)
print("U =", U.data, "det", U.det())
print("V =", V.data, "det", V.det())
print("U @ A @ V == D:", (U @ A @ V) == D)
print()

# The cokernel Z^3 / rows(A) read off the diagonal:
print("invariant factors of Z^3 / rows(A):", abelian_invariants(A))

# Generator orders turn a free presentation into a finite one.  This is the
# shape of every homology computation in the package: relation rows over
# generators, canonicalized by SNF.
relations = IntMatrix([[2, -1, 0], [0, 2, -1]])
print("with free generators:   ", abelian_invariants(relations))
print("with all orders equal 8:", abelian_invariants(relations, [8, 8, 8]))
print()

# Kernels over a prime field: basis vectors of ker(x -> Mx) over GF(5).
M = IntMatrix([[1, 2, 3, 4], [0, 1, 1, 0]])
for vec in kernel_basis_mod_p(M, 5):
    print("kernel vector mod 5:", vec)
