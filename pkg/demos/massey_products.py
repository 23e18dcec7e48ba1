# Massey products: defining systems, strong vanishing, and lifting.
#
# Cohomology of a connected sum is itself a dg algebra with zero
# differential, so Massey products can be enumerated there exactly.
# Adjoining contractible two-step summands produces surjective
# quasi-isomorphisms (acyclic fibrations) along which cocycles,
# coboundaries, and whole defining systems lift.

from koszulhh.algebra import BooleanRing, ConnectedSumAlgebra
from koszulhh.massey import (
    CohomologyClass,
    extend_with_acyclic_pairs,
    from_connected_sum,
    lift_cocycle,
    lift_defining_system,
    massey_product,
    massey_product_set,
    strong_massey_check,
    trivial_defining_system,
)

# The Boolean algebra on three atoms as a dg algebra, truncated in degree 4.
H = from_connected_sum(ConnectedSumAlgebra(0, BooleanRing(3)), 4)
print("graded dimensions:", H.dims, " zero differential:", H.has_zero_differential())

# Three degree-1 classes with vanishing neighbouring products.
x1, x2, x3 = (CohomologyClass(H, H.element(1, 1 << i)) for i in range(3))
ds = trivial_defining_system(H, [x1, x2, x3])
print("triple product of (x1, x2, x3) from the trivial system:",
      massey_product(ds).element.bits, "(zero class)")

# All defining systems at once: the full set of attainable product classes.
reps = massey_product_set(H, [x1, x2, x3])
print("product set over every defining system:", sorted(reps))
print("contains zero:", 0 in reps)

# Strong vanishing, sampled: every tuple with vanishing neighbouring
# products yields the zero class.  This is the formality fingerprint.
report = strong_massey_check(H, samples=100, max_n=5, seed=0)
print("strong vanishing on", report.checked, "sampled tuples:", report.all_zero)

# An acyclic fibration onto H: adjoin two contractible pairs.
ext, proj = extend_with_acyclic_pairs(H, [1, 2])
proj.validate()
print("\nextension dims:", ext.dims)
print("surjective:", proj.degreewise_surjective(),
      " quasi-isomorphism:", proj.is_quasi_iso())

# Lift the classes, then the entire defining system, and compare downstairs.
up = [CohomologyClass(ext, lift_cocycle(proj, c.element)) for c in (x1, x2, x3)]
lifted = lift_defining_system(proj, up, ds)
entrywise = all(
    proj.apply(lifted.entry(*slot)).bits == ds.entry(*slot).bits
    for slot in ds.slots()
)
print("lift projects entrywise onto the original system:", entrywise)
down = CohomologyClass(H, proj.apply(massey_product(lifted).element))
print("lifted product maps to the same class:", down.same_class(massey_product(ds)))
