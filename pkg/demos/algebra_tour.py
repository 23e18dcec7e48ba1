# A tour of the graded algebras this package computes with.
#
# The building blocks are finite Boolean rings (every element squares to
# itself) and a space of free generators whose positive-degree products all
# vanish.  Gluing the two along the unit gives the connected-sum algebras
# that every other module consumes.

from koszulhh.algebra import (
    BooleanRing,
    ConnectedSumAlgebra,
    Subring,
    graded_multiply,
    ideal_decompose,
)

# A Boolean ring on three atoms.  Elements are atom masks; the product is
# intersection and the sum is symmetric difference.
ring = BooleanRing(3)
x1, x2, x3 = (ring.atom(i) for i in range(3))

print("atoms:", [f"{a:03b}" for a in (x1, x2, x3)])
print("x1 * x1 =", f"{ring.product(x1, x1):03b}", "(idempotent)")
print("x1 * x2 =", f"{ring.product(x1, x2):03b}", "(orthogonal)")
print("x1 + x2 + x3 =", f"{ring.add(ring.add(x1, x2), x3):03b}", "(the unit)")

# An element of the two-generator ideal (x, y) with x * y = 0 splits
# uniquely as a multiple of x plus a multiple of y.
z = x1 | x3
a, b = ideal_decompose(ring, z, x1 | x2, x3)
print("decompose", f"{z:03b}", "over the ideal pair:", f"{a:03b}", f"{b:03b}")

# Subrings are partitions of the atoms.  Adjoining an element refines the
# partition by intersecting every block with it and its complement.
coarse = Subring.trivial(ring)
finer = coarse.adjoin(x1 | x2)
print("trivial subring blocks:", [f"{blk:03b}" for blk in coarse.blocks])
print("after adjoining x1+x2:", [f"{blk:03b}" for blk in finer.blocks])

# The connected sum of one free generator with the Boolean part.  Degree 1
# holds the free generator and the atoms; higher degrees hold only atoms.
alg = ConnectedSumAlgebra(1, ring)
print("graded dimensions:", [alg.graded_dim(d) for d in range(6)])
print("degree-1 labels:", alg.basis_labels(1))

# Free generators kill everything of positive degree; atoms multiply as in
# the ring, degree by degree.
v = alg.element(1, 0b0001)
a1 = alg.element(1, 0b0010)
print("v * x1 =", graded_multiply(alg, v, a1).bits)
print("x1 * x1 =", graded_multiply(alg, a1, a1).bits, "(degree 2 copy of x1)")
