"""Exact integer normal forms, with the certificates that make them checkable.

Every reduction in ktcalc returns the unimodular transforms alongside the
form, so "is this right?" is always a matrix multiplication away.
"""

from ktcalc import IntMatrix, snf, hnf, kernel_basis, cokernel, rank

# A matrix whose cokernel is about to be interesting: these are the kinds
# of maps (id - induced automorphism) that come out of group actions.
m = IntMatrix.from_rows([
    [1, 1],
    [-1, 2],
])

result = snf(m)
print("matrix:          ", m.to_rows())
print("smith diagonal:  ", result.diagonal())
print("certificate u@m@v:", (result.u @ m @ result.v).to_rows())
print("equals d:        ", result.u @ m @ result.v == result.d)
print()

# The diagonal [1, 3] says Z^2 / column-span = Z/3: one invariant factor.
print("cokernel:        ", cokernel(m))
print("rank:            ", rank(m))
print()

# Hermite form is the workhorse behind membership tests and exact solving.
h, u = hnf(IntMatrix.from_rows([[4, 6], [2, 4]]))
print("hermite form of [[4,6],[2,4]]:", h.to_rows())
print("left transform:  ", u.to_rows())
print()

# Kernels are honest integer lattices, not floating-point null spaces.
k = kernel_basis(IntMatrix.from_rows([[1, 2]]))
print("kernel of [1 2]: columns", [k.column(j) for j in range(k.cols)])
print()

# Entries can be as large as they like; nothing overflows.
big = IntMatrix.from_rows([[10**30, 1], [0, 10**30]])
print("snf of a 10^30-entry matrix:", snf(big).diagonal())
