"""Tests for orbit mechanics, the coboundary solver, and cocycle extension."""

import random

import pytest

from koszulhh.algebra import BooleanRing, ConnectedSumAlgebra, Subring
from koszulhh.coboundary import (
    bottom_cocycles,
    drop_first,
    drop_last,
    extend_cocycle,
    extend_cocycle_split,
    head_tail,
    is_stable,
    orbit_decomposition,
    restrict_cochain,
    rotate_back,
    rotate_forward,
    solve_coboundary,
)
from koszulhh.errors import NotACocycleError
from koszulhh.hochschild import Cochain, HochschildComplex


def complex_for(m, n):
    ring = BooleanRing(n) if n else None
    return HochschildComplex(ConnectedSumAlgebra(m, ring))


def zero_cochain(hc, k, s):
    return hc.cochain_from_bits(k, s, 0)


def test_rotation_round_trip():
    hc = complex_for(1, 2)
    for k in (1, 2, 3, 4):
        for seq in hc.sequences(k):
            assert rotate_back(rotate_forward(seq, 1), 1) == seq
            assert rotate_forward(rotate_back(seq, 1), 1) == seq


def test_rotation_moves_last_entry():
    assert rotate_forward((0, 1, 2), 0) == (2, 0, 1)
    assert rotate_back((2, 0, 1), 0) == (0, 1, 2)


def test_is_stable_examples():
    # only sequences framed by one atom are stable
    assert is_stable((0, 1, 0), 0)
    assert not is_stable((0, 1, 0), 1)
    assert not is_stable((0, 1), 0)
    assert is_stable((1,), 0)
    assert not is_stable((0, 0), 1)


def test_stable_sequences_are_fixed():
    assert rotate_forward((0, 1, 0), 0) == (0, 1, 0)
    assert rotate_back((0, 1, 0), 0) == (0, 1, 0)


def test_drop_helpers():
    assert drop_first((3, 1, 2)) == (1, 2)
    assert drop_last((3, 1, 2)) == (3, 1)


def test_orbit_decomposition_three_atoms():
    hc = complex_for(0, 3)
    orbits = orbit_decomposition(hc, 2)
    found = {orbit.sequences for orbit in orbits}
    assert found == {
        ((0, 1), (1, 0)),
        ((0, 2), (2, 0)),
        ((1, 2), (2, 1)),
    }
    assert all(not orbit.stable and not orbit.r_fixed for orbit in orbits)
    by_start = {orbit.sequences[0]: orbit for orbit in orbits}
    assert by_start[(0, 1)].truncation_set() == ((1,), (0,))


def test_orbit_decomposition_free_generator():
    # a constant free sequence is fixed by the rotation without being stable
    hc = complex_for(1, 1)
    orbits = {orbit.sequences: orbit for orbit in orbit_decomposition(hc, 2)}
    assert set(orbits) == {((0, 0),), ((0, 1), (1, 0))}
    fixed = orbits[((0, 0),)]
    assert fixed.r_fixed and not fixed.stable


def test_orbit_stable_singleton():
    hc = complex_for(0, 3)
    orbits = {orbit.sequences: orbit for orbit in orbit_decomposition(hc, 3)}
    stable = orbits[((0, 1, 0),)]
    assert stable.stable and not stable.r_fixed


def test_orbits_partition_sequences():
    for m, n in ((0, 3), (1, 2), (2, 2)):
        hc = complex_for(m, n)
        for k in (1, 2, 3, 4):
            orbits = orbit_decomposition(hc, k)
            seqs = [t for orbit in orbits for t in orbit.sequences]
            assert len(seqs) == len(set(seqs)) == len(list(hc.sequences(k)))


def test_orbit_decomposition_rejects_zero_length():
    with pytest.raises(ValueError):
        orbit_decomposition(complex_for(0, 3), 0)


def test_head_tail_split():
    hc = complex_for(0, 3)
    rng = random.Random(7)
    for _ in range(10):
        f = hc.random_cocycle(3, -1, rng)
        index = hc.sequence_index(3)
        for orbit in orbit_decomposition(hc, 3):
            ht = head_tail(hc, f, orbit)
            assert ht.law_holds(0)
            for t in orbit.sequences:
                val = f.values[index[t]]
                if orbit.stable:
                    assert ht.heads[t] == ht.tails[t] == val
                else:
                    assert ht.heads[t] ^ ht.tails[t] == val
                    assert ht.heads[t] & ~hc.generator_mask(t[0]) == 0
                    assert ht.tails[t] & ~hc.generator_mask(t[-1]) == 0


def test_head_tail_rejects_escaping_value():
    # a value outside both end ideals cannot come from a cocycle
    hc = complex_for(0, 3)
    index = hc.sequence_index(2)
    vals = [0] * len(index)
    vals[index[(0, 1)]] = 0b100
    f = Cochain(2, 0, tuple(vals))
    orbit = next(o for o in orbit_decomposition(hc, 2) if (0, 1) in o.sequences)
    with pytest.raises(NotACocycleError):
        head_tail(hc, f, orbit)


def test_solve_coboundary_documented_example():
    # the single-orbit cocycle supported on a stable sequence
    hc = complex_for(0, 3)
    index = hc.sequence_index(3)
    vals = [0] * len(index)
    vals[index[(0, 1, 0)]] = 0b001
    f = Cochain(3, -1, tuple(vals))
    assert hc.is_cocycle(f)
    g = solve_coboundary(hc, f)
    expected = [0] * len(hc.sequence_index(2))
    expected[hc.sequence_index(2)[(1, 0)]] = 0b001
    assert g == Cochain(2, -1, tuple(expected))
    assert hc.coboundary_of(g) == f


def test_solve_coboundary_random():
    rng = random.Random(11)
    cases = [
        (0, 3, 2, 0),
        (0, 3, 3, -1),
        (1, 2, 2, 0),
        (1, 1, 3, -1),
        (2, 2, 2, 1),
    ]
    for m, n, k, s in cases:
        hc = complex_for(m, n)
        for _ in range(10):
            f = hc.random_cocycle(k, s, rng)
            g = solve_coboundary(hc, f)
            assert g.k == k - 1 and g.s == s
            assert hc.coboundary_of(g) == f


def test_solve_coboundary_domain():
    hc = complex_for(0, 3)
    with pytest.raises(ValueError):
        solve_coboundary(hc, zero_cochain(hc, 1, 1))
    with pytest.raises(ValueError):
        solve_coboundary(hc, zero_cochain(hc, 3, -2))


def test_solve_coboundary_rejects_non_cocycle():
    hc = complex_for(0, 3)
    bad = None
    for bits in range(1, 1 << hc.cochain_dim(2, 0)):
        cand = hc.cochain_from_bits(2, 0, bits)
        if not hc.is_cocycle(cand):
            bad = cand
            break
    with pytest.raises(NotACocycleError):
        solve_coboundary(hc, bad)


def test_bottom_cocycles_vanish():
    for m, n in ((0, 3), (1, 1), (2, 0)):
        hc = complex_for(m, n)
        assert [bottom_cocycles(hc, k) for k in (1, 2, 3, 4)] == [0, 0, 0, 0]


def test_bottom_cocycles_small_algebras():
    # below three generators the bottom row does not clear out
    assert [bottom_cocycles(complex_for(0, 1), k) for k in (1, 2, 3, 4)] == [1, 0, 0, 0]
    assert [bottom_cocycles(complex_for(0, 2), k) for k in (1, 2, 3, 4)] == [0, 1, 0, 1]
    assert [bottom_cocycles(complex_for(1, 0), k) for k in (1, 2, 3, 4)] == [1, 1, 1, 1]


def test_bottom_cocycles_rejects_degree_zero():
    with pytest.raises(ValueError):
        bottom_cocycles(complex_for(0, 3), 0)


def test_extend_identity_adjoin():
    ring = BooleanRing(3)
    hc = HochschildComplex(ConnectedSumAlgebra(0, ring), Subring.trivial(ring))
    f = hc.random_cocycle(2, -1, random.Random(3))
    hc2, g = extend_cocycle(hc, ring.one, f)
    assert hc2 is hc and g == f


def test_extend_cocycle_strict():
    ring = BooleanRing(3)
    hc = HochschildComplex(ConnectedSumAlgebra(0, ring), Subring.trivial(ring))
    rng = random.Random(5)
    x = ring.atom(0) | ring.atom(1)
    for k, s in ((2, -1), (3, -2)):
        for _ in range(10):
            f = hc.random_cocycle(k, s, rng)
            hc2, g = extend_cocycle(hc, x, f)
            assert hc2.subring.blocks == (0b011, 0b100)
            assert hc2.is_cocycle(g)
            assert restrict_cochain(hc2, hc, g) == f


def test_extend_cocycle_strict_errors():
    ring = BooleanRing(3)
    hc = HochschildComplex(ConnectedSumAlgebra(0, ring), Subring.trivial(ring))
    with pytest.raises(ValueError):
        extend_cocycle(hc, ring.atom(0), zero_cochain(hc, 2, 0))

    hc_free = HochschildComplex(ConnectedSumAlgebra(1, BooleanRing(1)))
    vals = [0] * len(hc_free.sequence_index(2))
    vals[0] = 0b1
    with pytest.raises(ValueError):
        extend_cocycle(hc_free, 0b1, Cochain(2, -1, tuple(vals)))

    coarse = HochschildComplex(
        ConnectedSumAlgebra(0, ring), Subring(ring, ((0b011), (0b100)))
    )
    vals = [0] * len(coarse.sequence_index(2))
    vals[coarse.sequence_index(2)[(0, 1)]] = 0b10
    with pytest.raises(ValueError):
        extend_cocycle(coarse, ring.atom(0), Cochain(2, -1, tuple(vals)))


def test_extend_requires_boolean_part():
    hc = HochschildComplex(ConnectedSumAlgebra(2, None))
    f = zero_cochain(hc, 2, -1)
    with pytest.raises(ValueError):
        extend_cocycle(hc, 1, f)
    with pytest.raises(ValueError):
        extend_cocycle_split(hc, 1, f)


def test_extend_split_rejects_non_cocycle():
    ring = BooleanRing(3)
    hc = HochschildComplex(ConnectedSumAlgebra(1, ring), Subring.trivial(ring))
    bad = None
    for bits in range(1, 1 << hc.cochain_dim(2, -1)):
        cand = hc.cochain_from_bits(2, -1, bits)
        if not hc.is_cocycle(cand):
            bad = cand
            break
    with pytest.raises(NotACocycleError):
        extend_cocycle_split(hc, ring.atom(0), bad)


def test_extend_split_tower():
    # refine twice and restrict back through each stage
    ring = BooleanRing(3)
    alg = ConnectedSumAlgebra(1, ring)
    hc0 = HochschildComplex(alg, Subring.trivial(ring))
    rng = random.Random(9)
    for k in (2, 3):
        for _ in range(10):
            f0 = hc0.random_cocycle(k, 1 - k, rng)
            hc1, f1 = extend_cocycle_split(hc0, 0b011, f0)
            assert hc1.subring.blocks == (0b011, 0b100)
            hc2, f2 = extend_cocycle_split(hc1, 0b001, f1)
            assert hc2.subring.blocks == (0b001, 0b010, 0b100)
            assert hc2.is_cocycle(f2)
            assert restrict_cochain(hc2, hc1, f2) == f1
            assert restrict_cochain(hc1, hc0, f1) == f0
