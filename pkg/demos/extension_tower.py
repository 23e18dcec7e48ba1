# Extending cocycles along a refinement of the coefficient subring.
#
# Coefficients live in a subring of the Boolean part, i.e. a partition of
# the atoms.  Adjoining an element splits blocks and embeds the coarse
# cochain complex into a finer one.  Restriction goes the easy way; this
# demo pushes cocycles the hard way, up the tower, with values transported
# through the branch where the adjoined element evaluates to one.

import random

from koszulhh.algebra import BooleanRing, ConnectedSumAlgebra, Subring
from koszulhh.coboundary import extend_cocycle_split, restrict_cochain
from koszulhh.hochschild import HochschildComplex

ring = BooleanRing(3)
alg = ConnectedSumAlgebra(1, ring)

# Start with the coarsest coefficients: a single block.
hc0 = HochschildComplex(alg, Subring.trivial(ring))
print("tower bottom, blocks:", [f"{b:03b}" for b in hc0.subring.blocks])

rng = random.Random(7)
f0 = hc0.random_cocycle(2, -1, rng)
print("coarse cocycle values:", f0.values)

# First refinement: adjoin x1 + x2, splitting the unit block in two.
hc1, f1 = extend_cocycle_split(hc0, 0b011, f0)
print("\nafter adjoining x1+x2:", [f"{b:03b}" for b in hc1.subring.blocks])
print("extension is a cocycle:", hc1.is_cocycle(f1))
print("restriction recovers the original:", restrict_cochain(hc1, hc0, f1) == f0)

# Second refinement: adjoin x1, reaching the full atom partition.
hc2, f2 = extend_cocycle_split(hc1, 0b001, f1)
print("\nafter adjoining x1:", [f"{b:03b}" for b in hc2.subring.blocks])
print("extension is a cocycle:", hc2.is_cocycle(f2))
print("restriction down one step:", restrict_cochain(hc2, hc1, f2) == f1)
print("restriction to the bottom:",
      restrict_cochain(hc1, hc0, restrict_cochain(hc2, hc1, f2)) == f0)

# The same game for many random cocycles in both supported degrees.
count = 0
for k in (2, 3):
    for _ in range(50):
        f = hc0.random_cocycle(k, 1 - k, rng)
        up, fx = extend_cocycle_split(hc0, 0b011, f)
        assert up.is_cocycle(fx) and restrict_cochain(up, hc0, fx) == f
        count += 1
print(f"\n{count} random extensions verified (cocycle + restriction)")
