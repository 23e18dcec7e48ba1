"""Finite differential graded algebras over GF(2) and Massey products.

A :class:`DgAlgebra` stores one basis per degree up to a truncation bound,
the differentials as bit matrices and the multiplication as a table over
basis pairs.  Products landing above the truncation bound are zero, which
keeps the quotient honest: the axioms are validated inside the window.

On top of that sit defining systems for n-fold Massey products, the
brute-force enumeration of every defining system for small inputs, the
statistical check that products with vanishing neighbouring cups vanish,
and the transfer of cocycles, coboundaries and whole defining systems
backwards along a surjective quasi-isomorphism.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .algebra import ConnectedSumAlgebra, GradedElement, graded_multiply
from .errors import CapExceeded, InvalidDefiningSystemError, NotACocycleError
from .gf2 import BitMatrix


def _columns_matrix(columns: list[int], nrows: int) -> BitMatrix:
    """Matrix whose j-th column is the given bit pattern over ``nrows``."""
    return BitMatrix(columns, nrows).transpose()


class DgAlgebra:
    """A unital dg algebra with chosen bases, truncated above ``top``.

    ``dims[d]`` is the basis size in degree ``d`` for ``0 <= d <= top``.
    ``diffs[d]`` maps degree ``d`` to ``d + 1`` (so there are ``top`` of
    them); ``mult`` maps a basis pair key ``(d1, i1, d2, i2)`` to the bit
    pattern of the product in degree ``d1 + d2``, with absent keys meaning
    zero.  ``unit_bits`` names the multiplicative unit in degree 0.
    """

    def __init__(
        self,
        dims: Sequence[int],
        diffs: Sequence[BitMatrix],
        mult: dict[tuple[int, int, int, int], int],
        unit_bits: int = 1,
        validate: bool = True,
    ):
        self.dims = tuple(int(d) for d in dims)
        if not self.dims or any(d < 0 for d in self.dims):
            raise ValueError("need one nonnegative dimension per degree")
        self.diffs = tuple(diffs)
        if len(self.diffs) != self.top:
            raise ValueError("need exactly one differential per degree below top")
        for d, mat in enumerate(self.diffs):
            if mat.nrows != self.dims[d + 1] or mat.cols != self.dims[d]:
                raise ValueError(f"differential at degree {d} has the wrong shape")
        self.mult = dict(mult)
        for (d1, i1, d2, i2), bits in self.mult.items():
            if not (0 <= i1 < self.dim(d1) and 0 <= i2 < self.dim(d2)):
                raise ValueError("multiplication key outside the basis")
            if d1 + d2 > self.top or bits >> self.dim(d1 + d2):
                raise ValueError("product value does not fit its degree")
        if unit_bits >> self.dim(0):
            raise ValueError("unit does not fit degree 0")
        self.unit = GradedElement(0, unit_bits)
        if validate:
            self.validate()

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def dim(self, d: int) -> int:
        if 0 <= d <= self.top:
            return self.dims[d]
        return 0

    def zero(self, d: int) -> GradedElement:
        return GradedElement(d, 0)

    def element(self, d: int, bits: int) -> GradedElement:
        if bits >> self.dim(d):
            raise ValueError("bit pattern does not fit the basis in this degree")
        return GradedElement(d, bits)

    def basis(self) -> Iterator[tuple[int, int]]:
        for d in range(self.top + 1):
            for i in range(self.dims[d]):
                yield d, i

    def diff(self, a: GradedElement) -> GradedElement:
        d = a.degree
        if d < 0 or d >= self.top:
            return self.zero(d + 1)
        return GradedElement(d + 1, self.diffs[d].mul_vec(a.bits))

    def product(self, a: GradedElement, b: GradedElement) -> GradedElement:
        d = a.degree + b.degree
        if d > self.top:
            return self.zero(d)
        out = 0
        abits = a.bits
        while abits:
            i = (abits & -abits).bit_length() - 1
            abits &= abits - 1
            bbits = b.bits
            while bbits:
                j = (bbits & -bbits).bit_length() - 1
                bbits &= bbits - 1
                out ^= self.mult.get((a.degree, i, b.degree, j), 0)
        return GradedElement(d, out)

    def validate(self) -> None:
        """Check the axioms inside the truncation window; raise on failure."""
        for d in range(self.top - 1):
            if not self.diffs[d + 1].compose(self.diffs[d]).is_zero():
                raise ValueError(f"differential does not square to zero at degree {d}")
        basis = list(self.basis())
        for d1, i1 in basis:
            e1 = GradedElement(d1, 1 << i1)
            if self.product(self.unit, e1).bits != e1.bits:
                raise ValueError(f"left unit fails on degree {d1} basis vector {i1}")
            if self.product(e1, self.unit).bits != e1.bits:
                raise ValueError(f"right unit fails on degree {d1} basis vector {i1}")
            for d2, i2 in basis:
                if d1 + d2 + 1 > self.top:
                    continue
                e2 = GradedElement(d2, 1 << i2)
                lhs = self.diff(self.product(e1, e2))
                rhs = self.product(self.diff(e1), e2) ^ self.product(e1, self.diff(e2))
                if lhs.bits != rhs.bits:
                    raise ValueError(
                        f"Leibniz fails on degrees ({d1}, {d2}) pair ({i1}, {i2})"
                    )
        for d1, i1 in basis:
            e1 = GradedElement(d1, 1 << i1)
            for d2, i2 in basis:
                e2 = GradedElement(d2, 1 << i2)
                left = self.product(e1, e2)
                for d3, i3 in basis:
                    if d1 + d2 + d3 > self.top:
                        continue
                    e3 = GradedElement(d3, 1 << i3)
                    if self.product(left, e3).bits != self.product(
                        e1, self.product(e2, e3)
                    ).bits:
                        raise ValueError(
                            f"associativity fails on degrees ({d1}, {d2}, {d3})"
                        )

    # Cohomology of the underlying cochain complex.

    def rank_diff(self, d: int) -> int:
        if 0 <= d < self.top:
            return self.diffs[d].rank()
        return 0

    def cocycle_basis(self, d: int) -> list[int]:
        if d < 0 or d > self.top:
            return []
        if d == self.top:
            return [1 << i for i in range(self.dims[d])]
        return [v.bits for v in self.diffs[d].kernel_basis()]

    def cohomology_dim(self, d: int) -> int:
        return self.dim(d) - self.rank_diff(d) - self.rank_diff(d - 1)

    def is_cocycle(self, a: GradedElement) -> bool:
        return self.diff(a).bits == 0

    def is_coboundary(self, a: GradedElement) -> bool:
        if a.bits == 0:
            return True
        d = a.degree
        if not 1 <= d <= self.top:
            return False
        return self.diffs[d - 1].solve(a.bits) is not None

    def coboundary_preimage(self, a: GradedElement) -> GradedElement | None:
        """Some ``p`` with ``diff(p) == a``, or None."""
        d = a.degree
        if not 1 <= d <= self.top:
            return self.zero(d - 1) if a.bits == 0 else None
        x = self.diffs[d - 1].solve(a.bits)
        if x is None:
            return None
        return GradedElement(d - 1, x.bits)

    def has_zero_differential(self) -> bool:
        return all(mat.is_zero() for mat in self.diffs)

    def random_element(self, d: int, rng: random.Random) -> GradedElement:
        return GradedElement(d, rng.getrandbits(self.dim(d)) if self.dim(d) else 0)

    def random_cocycle(self, d: int, rng: random.Random) -> GradedElement:
        bits = 0
        for z in self.cocycle_basis(d):
            if rng.getrandbits(1):
                bits ^= z
        return GradedElement(d, bits)

    def __repr__(self) -> str:
        return f"DgAlgebra(dims={list(self.dims)})"


def from_connected_sum(alg: ConnectedSumAlgebra, top: int) -> DgAlgebra:
    """The graded algebra itself as a dg algebra with zero differential."""
    dims = [alg.graded_dim(d) for d in range(top + 1)]
    diffs = [BitMatrix.zeros(dims[d + 1], dims[d]) for d in range(top)]
    mult: dict[tuple[int, int, int, int], int] = {}
    for d1 in range(top + 1):
        for i1 in range(dims[d1]):
            for d2 in range(top + 1 - d1):
                for i2 in range(dims[d2]):
                    prod = graded_multiply(
                        alg,
                        alg.element(d1, 1 << i1),
                        alg.element(d2, 1 << i2),
                    )
                    if prod.bits:
                        mult[(d1, i1, d2, i2)] = prod.bits
    return DgAlgebra(dims, diffs, mult, unit_bits=1, validate=False)


@dataclass
class DgMap:
    """A degreewise linear map of dg algebras over a common truncation."""

    source: DgAlgebra
    target: DgAlgebra
    mats: tuple[BitMatrix, ...]

    def __post_init__(self):
        if self.source.top != self.target.top:
            raise ValueError("source and target must share the truncation degree")
        if len(self.mats) != self.source.top + 1:
            raise ValueError("need one matrix per degree")
        for d, mat in enumerate(self.mats):
            if mat.nrows != self.target.dim(d) or mat.cols != self.source.dim(d):
                raise ValueError(f"matrix at degree {d} has the wrong shape")

    def apply(self, a: GradedElement) -> GradedElement:
        if a.degree > self.source.top:
            return GradedElement(a.degree, 0)
        return GradedElement(a.degree, self.mats[a.degree].mul_vec(a.bits))

    def validate(self) -> None:
        """Chain map, multiplicative and unit-preserving; raise on failure."""
        top = self.source.top
        for d in range(top):
            left = self.mats[d + 1].compose(self.source.diffs[d])
            right = self.target.diffs[d].compose(self.mats[d])
            if left != right:
                raise ValueError(f"not a chain map at degree {d}")
        if self.apply(self.source.unit).bits != self.target.unit.bits:
            raise ValueError("unit is not preserved")
        basis = list(self.source.basis())
        for d1, i1 in basis:
            e1 = GradedElement(d1, 1 << i1)
            fe1 = self.apply(e1)
            for d2, i2 in basis:
                if d1 + d2 > top:
                    continue
                e2 = GradedElement(d2, 1 << i2)
                lhs = self.apply(self.source.product(e1, e2))
                rhs = self.target.product(fe1, self.apply(e2))
                if lhs.bits != rhs.bits:
                    raise ValueError(
                        f"not multiplicative on degrees ({d1}, {d2}) pair ({i1}, {i2})"
                    )

    def degreewise_surjective(self) -> bool:
        return all(
            self.mats[d].rank() == self.target.dim(d)
            for d in range(self.source.top + 1)
        )

    def is_quasi_iso(self) -> bool:
        """Does the map induce isomorphisms on cohomology in every degree?"""
        for d in range(self.source.top + 1):
            hs = self.source.cohomology_dim(d)
            ht = self.target.cohomology_dim(d)
            if hs != ht:
                return False
            cob_rank = self.target.rank_diff(d - 1)
            cols = [self.mats[d].mul_vec(z) for z in self.source.cocycle_basis(d)]
            if 0 <= d - 1 < self.target.top:
                cols.extend(self.target.diffs[d - 1].transpose().rows)
            induced = _columns_matrix(cols, self.target.dim(d)).rank() - cob_rank
            if induced != ht:
                return False
        return True


def extend_with_acyclic_pairs(
    base: DgAlgebra, pair_degrees: Sequence[int]
) -> tuple[DgAlgebra, DgMap]:
    """Adjoin contractible two-step summands and return the projection.

    Each requested degree ``d`` contributes a generator in degree ``d``
    whose differential is a fresh generator in degree ``d + 1``.  Products
    of the new generators with anything of positive degree vanish; the unit
    acts as the identity.  The projection back onto ``base`` is then a
    surjective quasi-isomorphism, giving a stock of acyclic fibrations.
    """
    if base.dim(0) != 1 or base.unit.bits != 1:
        raise ValueError("base must have a one-dimensional degree 0 spanned by the unit")
    top = base.top
    for d in pair_degrees:
        if not 1 <= d < top:
            raise ValueError("pair degrees must leave room for the differential")
    lower = [sorted(i for i, pd in enumerate(pair_degrees) if pd == d) for d in range(top + 1)]
    upper = [sorted(i for i, pd in enumerate(pair_degrees) if pd + 1 == d) for d in range(top + 1)]
    dims = [base.dim(d) + len(lower[d]) + len(upper[d]) for d in range(top + 1)]

    def lower_coord(d: int, pair: int) -> int:
        return base.dim(d) + lower[d].index(pair)

    def upper_coord(d: int, pair: int) -> int:
        return base.dim(d) + len(lower[d]) + upper[d].index(pair)

    diffs = []
    for d in range(top):
        cols = [0] * dims[d]
        base_cols = base.diffs[d].transpose().rows
        for j in range(base.dim(d)):
            cols[j] = base_cols[j]
        for pair in lower[d]:
            cols[lower_coord(d, pair)] = 1 << upper_coord(d + 1, pair)
        diffs.append(_columns_matrix(cols, dims[d + 1]))

    mult = dict(base.mult)
    for d in range(1, top + 1):
        for j in range(base.dim(d), dims[d]):
            mult[(0, 0, d, j)] = 1 << j
            mult[(d, j, 0, 0)] = 1 << j

    source = DgAlgebra(dims, diffs, mult, unit_bits=1, validate=False)
    mats = tuple(
        BitMatrix([1 << i for i in range(base.dim(d))], dims[d])
        for d in range(top + 1)
    )
    return source, DgMap(source, base, mats)


@dataclass(frozen=True)
class CohomologyClass:
    """A cocycle representative together with its ambient dg algebra."""

    algebra: DgAlgebra
    element: GradedElement

    def __post_init__(self):
        if not self.algebra.is_cocycle(self.element):
            raise NotACocycleError(
                f"representative in degree {self.element.degree} is not closed",
                witness=self.element,
            )

    @property
    def degree(self) -> int:
        return self.element.degree

    def is_zero_class(self) -> bool:
        return self.algebra.is_coboundary(self.element)

    def same_class(self, other: "CohomologyClass") -> bool:
        if self.degree != other.degree:
            return False
        return self.algebra.is_coboundary(self.element ^ other.element)


@dataclass
class DefiningSystem:
    """Entries ``a[i, j]`` for ``1 <= i < j <= n + 1`` minus the corner.

    ``degrees`` lists the degrees of the n input classes; the adjacent
    entries ``a[i, i + 1]`` represent them.  The corner ``(1, n + 1)`` is
    the slot the product itself obstructs and is never stored.
    """

    algebra: DgAlgebra
    degrees: tuple[int, ...]
    entries: dict[tuple[int, int], GradedElement] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.degrees)

    def expected_degree(self, i: int, j: int) -> int:
        return sum(self.degrees[i - 1 : j - 1]) - (j - 1 - i)

    def entry(self, i: int, j: int) -> GradedElement:
        return self.entries[(i, j)]

    def slots(self) -> list[tuple[int, int]]:
        """All entry positions, ordered by span then start."""
        out = []
        for span in range(1, self.n):
            for i in range(1, self.n + 2 - span):
                if (i, i + span) != (1, self.n + 1):
                    out.append((i, i + span))
        return out

    def validate(self) -> None:
        """Degree bookkeeping plus every defining relation; raise on failure."""
        if self.n < 2:
            raise InvalidDefiningSystemError(
                "need at least two input classes", relation=None
            )
        alg = self.algebra
        for i, j in self.slots():
            if (i, j) not in self.entries:
                raise InvalidDefiningSystemError(
                    f"missing entry ({i}, {j})", relation=(i, j)
                )
            a = self.entries[(i, j)]
            if a.degree != self.expected_degree(i, j):
                raise InvalidDefiningSystemError(
                    f"entry ({i}, {j}) has degree {a.degree}, "
                    f"expected {self.expected_degree(i, j)}",
                    relation=(i, j),
                )
        for i, j in self.slots():
            rhs = GradedElement(self.expected_degree(i, j) + 1, 0)
            for t in range(i + 1, j):
                rhs ^= alg.product(self.entries[(i, t)], self.entries[(t, j)])
            if alg.diff(self.entries[(i, j)]).bits != rhs.bits:
                raise InvalidDefiningSystemError(
                    f"defining relation fails at ({i}, {j})", relation=(i, j)
                )


def massey_product(ds: DefiningSystem) -> CohomologyClass:
    """The product class of a validated defining system."""
    ds.validate()
    n = ds.n
    alg = ds.algebra
    out = GradedElement(ds.expected_degree(1, n + 1) + 1, 0)
    for t in range(2, n + 1):
        out ^= alg.product(ds.entry(1, t), ds.entry(t, n + 1))
    if not alg.is_cocycle(out):
        raise InvalidDefiningSystemError(
            "product of a defining system failed to be closed", relation=(1, n + 1)
        )
    return CohomologyClass(alg, out)


def trivial_defining_system(
    alg: DgAlgebra, classes: Sequence[CohomologyClass]
) -> DefiningSystem:
    """Adjacent entries only; valid when neighbouring products vanish.

    Requires a zero differential, so that classes are honest elements and
    the vanishing of a neighbouring product can be read off exactly.
    """
    if not alg.has_zero_differential():
        raise ValueError("trivial defining systems need a zero differential")
    if len(classes) < 2:
        raise InvalidDefiningSystemError("need at least two input classes", relation=None)
    for c in classes:
        if c.algebra is not alg:
            raise ValueError("class lives in a different algebra")
    degrees = tuple(c.degree for c in classes)
    n = len(classes)
    for i in range(1, n):
        prod = alg.product(classes[i - 1].element, classes[i].element)
        if prod.bits:
            raise InvalidDefiningSystemError(
                f"neighbouring product of inputs {i} and {i + 1} is nonzero",
                relation=(i, i + 2),
            )
    ds = DefiningSystem(alg, degrees)
    for i in range(1, n + 1):
        ds.entries[(i, i + 1)] = classes[i - 1].element
    for i, j in ds.slots():
        if j - i >= 2:
            ds.entries[(i, j)] = GradedElement(ds.expected_degree(i, j), 0)
    return ds


def _reduce_modulo(bits: int, echelon: dict[int, int]) -> int:
    for p in sorted(echelon):
        if (bits >> p) & 1:
            bits ^= echelon[p]
    return bits


def _echelon(vectors: Iterator[int]) -> dict[int, int]:
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            p = (v & -v).bit_length() - 1
            have = basis.get(p)
            if have is None:
                basis[p] = v
                break
            v ^= have
    return basis


def massey_product_set(
    alg: DgAlgebra, classes: Sequence[CohomologyClass], cap: int = 1 << 20
) -> set[int]:
    """Canonical representatives of every attainable product class.

    Enumerates all defining systems: adjacent entries range over each class's
    full set of representatives, interior entries over all solutions of their
    defining relation.  The total number of systems is estimated up front and
    guarded by ``cap``.
    """
    n = len(classes)
    if n < 2:
        raise InvalidDefiningSystemError("need at least two input classes", relation=None)
    degrees = tuple(c.degree for c in classes)
    proto = DefiningSystem(alg, degrees)
    slots = proto.slots()
    freedom = 0
    for i, j in slots:
        d = proto.expected_degree(i, j)
        if j - i == 1:
            freedom += alg.rank_diff(d - 1)
        else:
            freedom += len(alg.cocycle_basis(d))
    total = 1 << freedom
    if total > cap:
        raise CapExceeded(
            f"enumerating 2**{freedom} defining systems exceeds the cap",
            needed=total,
            cap=cap,
        )
    out_degree = proto.expected_degree(1, n + 1) + 1
    out_boundaries = _echelon(
        iter(alg.diffs[out_degree - 1].transpose().rows)
        if 1 <= out_degree <= alg.top
        else iter(())
    )
    results: set[int] = set()

    def boundary_span(d: int) -> list[int]:
        if not 1 <= d <= alg.top:
            return []
        return list(_echelon(iter(alg.diffs[d - 1].transpose().rows)).values())

    def fill(pos: int, entries: dict[tuple[int, int], GradedElement]) -> None:
        if pos == len(slots):
            out = 0
            for t in range(2, n + 1):
                out ^= alg.product(entries[(1, t)], entries[(t, n + 1)]).bits
            results.add(_reduce_modulo(out, out_boundaries))
            return
        i, j = slots[pos]
        d = proto.expected_degree(i, j)
        if j - i == 1:
            base = classes[i - 1].element.bits
            span = boundary_span(d)
        else:
            rhs = 0
            for t in range(i + 1, j):
                rhs ^= alg.product(entries[(i, t)], entries[(t, j)]).bits
            if 0 <= d < alg.top:
                sol = alg.diffs[d].solve(rhs)
                if sol is None:
                    return
                base = sol.bits
            else:
                if rhs:
                    return
                base = 0
            span = alg.cocycle_basis(d)
        for mask in range(1 << len(span)):
            bits = base
            m = mask
            idx = 0
            while m:
                if m & 1:
                    bits ^= span[idx]
                m >>= 1
                idx += 1
            entries[(i, j)] = GradedElement(d, bits)
            fill(pos + 1, entries)
        entries.pop((i, j), None)

    fill(0, {})
    return results


@dataclass(frozen=True)
class StrongMasseyReport:
    samples: int
    max_n: int
    checked: int
    all_zero: bool
    failures: tuple[tuple[tuple[int, int], ...], ...]


def strong_massey_check(
    alg: DgAlgebra, samples: int = 200, max_n: int = 5, seed: int = 0
) -> StrongMasseyReport:
    """Sample tuples with vanishing neighbouring products; products must vanish.

    Tuples are built left to right: each next element is drawn from the
    kernel of multiplication by its predecessor, so every sampled tuple
    admits the trivial defining system by construction.
    """
    if not alg.has_zero_differential():
        raise ValueError("the strong vanishing check needs a zero differential")
    rng = random.Random(seed)
    degrees_avail = [d for d in (1, 2) if alg.dim(d) > 0]
    if not degrees_avail:
        raise ValueError("no classes to sample in degrees 1 or 2")
    checked = 0
    failures: list[tuple[tuple[int, int], ...]] = []
    for _ in range(samples):
        n = rng.randint(2, max_n)
        elts: list[GradedElement] = []
        d0 = rng.choice(degrees_avail)
        elts.append(alg.random_element(d0, rng))
        for _ in range(n - 1):
            d = rng.choice(degrees_avail)
            prev = elts[-1]
            cols = [
                alg.product(prev, GradedElement(d, 1 << j)).bits
                for j in range(alg.dim(d))
            ]
            kernel = _columns_matrix(cols, alg.dim(prev.degree + d)).kernel_basis()
            bits = 0
            for v in kernel:
                if rng.getrandbits(1):
                    bits ^= v.bits
            elts.append(GradedElement(d, bits))
        classes = [CohomologyClass(alg, e) for e in elts]
        ds = trivial_defining_system(alg, classes)
        result = massey_product(ds)
        checked += 1
        if not result.is_zero_class():
            failures.append(tuple((e.degree, e.bits) for e in elts))
    return StrongMasseyReport(
        samples=samples,
        max_n=max_n,
        checked=checked,
        all_zero=not failures,
        failures=tuple(failures),
    )


def lift_cocycle(q: DgMap, target_cocycle: GradedElement) -> GradedElement:
    """A source cocycle mapping onto a target cocycle under ``q``.

    Solves for a cocycle combination together with a correction coboundary
    in the target, then pulls the correction back through the surjection.
    Any failed solve means the map is not a surjective quasi-isomorphism.
    """
    src, tgt = q.source, q.target
    d = target_cocycle.degree
    if not tgt.is_cocycle(target_cocycle):
        raise NotACocycleError(
            f"target element in degree {d} is not closed", witness=target_cocycle
        )
    zbasis = src.cocycle_basis(d)
    cols = [q.mats[d].mul_vec(z) for z in zbasis]
    n_corr = tgt.dim(d - 1) if 1 <= d <= tgt.top else 0
    if n_corr:
        cols.extend(tgt.diffs[d - 1].transpose().rows)
    sol = _columns_matrix(cols, tgt.dim(d)).solve(target_cocycle.bits)
    if sol is None:
        raise ValueError("cocycle does not lift; the map is not an acyclic fibration")
    a_bits = 0
    for idx in range(len(zbasis)):
        if (sol.bits >> idx) & 1:
            a_bits ^= zbasis[idx]
    corr = sol.bits >> len(zbasis)
    if corr:
        pre = q.mats[d - 1].solve(corr)
        if pre is None:
            raise ValueError("correction does not lift; the map is not surjective")
        a_bits ^= src.diffs[d - 1].mul_vec(pre.bits)
    lifted = GradedElement(d, a_bits)
    assert src.is_cocycle(lifted)
    assert q.apply(lifted).bits == target_cocycle.bits
    return lifted


def lift_coboundary(
    q: DgMap, source_boundary: GradedElement, target_primitive: GradedElement
) -> GradedElement:
    """A source primitive of a coboundary with a prescribed image.

    Given a source cocycle ``b`` that maps to ``diff`` of the target element
    ``c``, produce ``e`` with ``diff(e) == b`` and ``q(e) == c``.
    """
    src, tgt = q.source, q.target
    if not src.is_cocycle(source_boundary):
        raise NotACocycleError(
            "prescribed boundary value is not closed", witness=source_boundary
        )
    if tgt.diff(target_primitive).bits != q.apply(source_boundary).bits:
        raise ValueError("target primitive does not bound the image")
    first = src.coboundary_preimage(source_boundary)
    if first is None:
        raise ValueError(
            "boundary value is not exact; the map is not a quasi-isomorphism"
        )
    residue = target_primitive ^ q.apply(first)
    correction = lift_cocycle(q, residue)
    out = first ^ correction
    assert src.diff(out).bits == source_boundary.bits
    assert q.apply(out).bits == target_primitive.bits
    return out


def lift_defining_system(
    q: DgMap, classes: Sequence[CohomologyClass], ds: DefiningSystem
) -> DefiningSystem:
    """Transfer a defining system backwards along an acyclic fibration.

    ``classes`` are source classes whose images are the classes of the
    adjacent entries of ``ds``.  The lift agrees with ``ds`` entrywise
    under ``q`` and is itself a valid defining system.
    """
    src, tgt = q.source, q.target
    if ds.algebra is not tgt:
        raise ValueError("defining system must live in the target")
    if len(classes) != ds.n:
        raise ValueError("need one source class per input")
    ds.validate()
    lifted = DefiningSystem(src, ds.degrees)
    for i in range(1, ds.n + 1):
        r = classes[i - 1].element
        if r.degree != ds.degrees[i - 1]:
            raise ValueError(f"source class {i} has the wrong degree")
        gap = ds.entry(i, i + 1) ^ q.apply(r)
        w = tgt.coboundary_preimage(gap)
        if w is None:
            raise ValueError(f"source class {i} does not map to the class of entry {i}")
        pre = q.mats[w.degree].solve(w.bits)
        if pre is None:
            raise ValueError("primitive does not lift; the map is not surjective")
        lifted.entries[(i, i + 1)] = r ^ src.diff(GradedElement(w.degree, pre.bits))
    for i, j in lifted.slots():
        if j - i == 1:
            continue
        d = lifted.expected_degree(i, j)
        boundary = GradedElement(d + 1, 0)
        for t in range(i + 1, j):
            boundary ^= src.product(lifted.entry(i, t), lifted.entry(t, j))
        if not src.is_cocycle(boundary):
            raise InvalidDefiningSystemError(
                f"lifted relations do not close at ({i}, {j})", relation=(i, j)
            )
        lifted.entries[(i, j)] = lift_coboundary(q, boundary, ds.entry(i, j))
    lifted.validate()
    return lifted


# Wire format for dg algebras, shared with the command line interface.


def dg_algebra_to_dict(alg: DgAlgebra) -> dict:
    diffs = []
    for d in range(alg.top):
        mat = alg.diffs[d]
        diffs.append([mat.row(i).to01() for i in range(mat.nrows)])
    mult = {
        f"{d1},{i1},{d2},{i2}": format_bits(bits, alg.dim(d1 + d2))
        for (d1, i1, d2, i2), bits in sorted(alg.mult.items())
    }
    return {
        "dims": list(alg.dims),
        "differentials": diffs,
        "multiplication": mult,
        "unit": format_bits(alg.unit.bits, alg.dim(0)),
    }


def dg_algebra_from_dict(data: dict) -> DgAlgebra:
    dims = [int(x) for x in data["dims"]]
    diffs = []
    for d, rows in enumerate(data["differentials"]):
        if rows:
            mat = BitMatrix.from01(rows)
            if mat.cols != dims[d]:
                raise ValueError(f"differential at degree {d} has the wrong width")
        else:
            mat = BitMatrix.zeros(dims[d + 1], dims[d])
        diffs.append(mat)
    mult = {}
    for key, val in data.get("multiplication", {}).items():
        d1, i1, d2, i2 = (int(x) for x in key.split(","))
        mult[(d1, i1, d2, i2)] = parse_bits(val)
    unit = parse_bits(data.get("unit", "1"))
    return DgAlgebra(dims, diffs, mult, unit_bits=unit)


def format_bits(bits: int, length: int) -> str:
    return "".join("1" if (bits >> i) & 1 else "0" for i in range(length))


def parse_bits(text: str) -> int:
    bits = 0
    for i, ch in enumerate(text):
        if ch == "1":
            bits |= 1 << i
        elif ch != "0":
            raise ValueError(f"invalid bit character {ch!r}")
    return bits
