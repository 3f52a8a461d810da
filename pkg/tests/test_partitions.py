import itertools
import math

import pytest

from greenbench import (
    DimensionError,
    Partition,
    ResourceLimitError,
    Transformation,
    all_nondecreasing,
    all_partitions,
    coarsest_with_maxima,
    identity,
    orbit_fiber,
    orbit_fiber_size,
    orbits,
    saturating_successor,
)

BELL = [1, 2, 5, 15, 52, 203, 877, 4140]  # n = 1..8


def test_canonical_form_and_str():
    p = Partition(6, [[5, 4, 6], [3, 2], [1]])
    assert p.blocks == ((1,), (2, 3), (4, 5, 6))
    assert str(p) == "{{1},{2,3},{4,5,6}}"
    assert p == Partition(6, [(2, 3), (1,), (6, 5, 4)])
    assert hash(p) == hash(Partition(6, [[1], [2, 3], [4, 5, 6]]))


def test_validation():
    with pytest.raises(ValueError):
        Partition(3, [[1, 2]])
    with pytest.raises(ValueError):
        Partition(3, [[1, 2], [2, 3]])
    with pytest.raises(ValueError):
        Partition(3, [[1, 2, 3], []])
    with pytest.raises(ValueError):
        Partition(3, [[1, 2, 4]])


def test_finest_coarsest():
    assert Partition.finest(4).blocks == ((1,), (2,), (3,), (4,))
    assert Partition.coarsest(4).blocks == ((1, 2, 3, 4),)
    assert Partition.finest(1) == Partition.coarsest(1)


def test_refines():
    t = orbits(Transformation([1, 3, 3, 5, 6, 6]))
    s = orbits(Transformation([4, 3, 3, 6, 6, 6]))
    assert t.refines(s)
    assert not s.refines(t)
    assert t.refines(t)
    assert not Partition(3, [[1, 2], [3]]).refines(Partition.finest(3))
    with pytest.raises(DimensionError):
        Partition.finest(3).refines(Partition.finest(4))


def test_meet_join_concrete():
    a = Partition(4, [[1, 2], [3], [4]])
    b = Partition(4, [[1], [2, 3], [4]])
    assert (a | b) == Partition(4, [[1, 2, 3], [4]])
    assert (a & b) == Partition.finest(4)
    assert (a & Partition.finest(4)) == Partition.finest(4)
    assert (a | Partition.coarsest(4)) == Partition.coarsest(4)
    with pytest.raises(DimensionError):
        a.meet(Partition.finest(3))


def test_lattice_laws_exhaustive_n4():
    parts = all_partitions(4)
    assert len(parts) == 15
    for a, b in itertools.product(parts, repeat=2):
        m = a.meet(b)
        j = a.join(b)
        assert m == b.meet(a)
        assert j == b.join(a)
        assert m.refines(a) and m.refines(b)
        assert a.refines(j) and b.refines(j)
        # universal properties against the full lattice
        for c in parts:
            if c.refines(a) and c.refines(b):
                assert c.refines(m)
            if a.refines(c) and b.refines(c):
                assert j.refines(c)
    for a, b, c in itertools.combinations(parts, 3):
        assert a.meet(b.meet(c)) == a.meet(b).meet(c)
        assert a.join(b.join(c)) == a.join(b).join(c)
        assert a.meet(a.join(b)) == a
        assert a.join(a.meet(b)) == a


def test_block_maxima():
    assert Partition(6, [[1], [2, 3], [4, 5, 6]]).block_maxima() == frozenset({1, 3, 6})
    assert Partition.finest(4).block_maxima() == frozenset({1, 2, 3, 4})
    assert Partition.coarsest(5).block_maxima() == frozenset({5})


def test_orbits_concrete():
    t = Transformation([1, 3, 3, 5, 6, 6])
    assert orbits(t) == Partition(6, [[1], [2, 3], [4, 5, 6]])
    s = Transformation([4, 3, 3, 6, 6, 6])
    assert orbits(s) == Partition(6, [[1, 4, 5, 6], [2, 3]])
    assert orbits(identity(4)) == Partition.finest(4)
    assert orbits(saturating_successor(4)) == Partition.coarsest(4)
    assert orbits(Transformation([2, 2, 4, 4])) == Partition(4, [[1, 2], [3, 4]])
    assert orbits(Transformation([3, 2, 4, 4])) == Partition(4, [[1, 3, 4], [2]])


def brute_orbit_relation(t):
    """Orbit partition from the defining relation: i ~ j when some forward
    iterates of i and j coincide."""
    n = t.n
    iterates = []
    for i in range(1, n + 1):
        seen = set()
        q = i
        while q not in seen:
            seen.add(q)
            q = t.apply(q)
        iterates.append(seen)
    blocks = []
    used = set()
    for i in range(1, n + 1):
        if i in used:
            continue
        block = {i}
        changed = True
        while changed:
            changed = False
            for j in range(1, n + 1):
                if j in block:
                    continue
                if any(iterates[j - 1] & iterates[k - 1] for k in block):
                    block.add(j)
                    changed = True
        used |= block
        blocks.append(sorted(block))
    return Partition(n, blocks)


def test_orbits_match_relation_closure():
    for n in range(1, 6):
        for images in itertools.product(range(1, n + 1), repeat=n):
            t = Transformation(images)
            assert orbits(t) == brute_orbit_relation(t)


def test_orbits_of_square_equal_for_nondecreasing():
    for n in range(1, 6):
        for t in all_nondecreasing(n):
            assert orbits(t * t) == orbits(t)


def test_coarsest_with_maxima():
    assert coarsest_with_maxima(4, {1, 3, 4}) == Partition(4, [[1], [3], [2, 4]])
    assert coarsest_with_maxima(4, {4}) == Partition.coarsest(4)
    assert coarsest_with_maxima(4, {1, 2, 3, 4}) == Partition.finest(4)
    assert coarsest_with_maxima(5, {1, 3, 4, 5}) == Partition(5, [[1], [2, 5], [3], [4]])
    with pytest.raises(ValueError):
        coarsest_with_maxima(4, {1, 2})
    with pytest.raises(ValueError):
        coarsest_with_maxima(4, {4, 5})


def test_coarsest_with_maxima_has_those_maxima():
    n = 5
    tops = [z for k in range(1, n + 1) for z in itertools.combinations(range(1, n + 1), k) if n in z]
    for z in tops:
        assert coarsest_with_maxima(n, z).block_maxima() == frozenset(z)


def test_orbit_fiber_concrete():
    p = coarsest_with_maxima(4, {3, 4})
    assert p == Partition(4, [[1, 2, 4], [3]])
    assert orbit_fiber(p) == [Transformation([2, 4, 3, 4]), Transformation([4, 4, 3, 4])]
    assert orbit_fiber(coarsest_with_maxima(4, {1, 3, 4})) == [Transformation([1, 4, 3, 4])]
    assert orbit_fiber(Partition.finest(5)) == [identity(5)]


def test_orbit_fiber_counts_from_worked_example():
    p = Partition(10, [[1, 2, 5], [3, 7], [4, 6, 8, 9, 10]])
    assert orbit_fiber_size(p) == 48
    q = Partition(10, [[5], [7], [1, 2, 3, 4, 6, 8, 9, 10]])
    assert orbit_fiber_size(q) == 5040
    assert orbit_fiber_size(Partition.finest(6)) == 1
    fiber = orbit_fiber(p)
    assert len(fiber) == 48
    for t in fiber:
        assert t.apply(5) == 5 and t.apply(7) == 7 and t.apply(10) == 10


def test_orbit_fiber_matches_definition():
    for n in range(1, 6):
        for p in all_partitions(n):
            fiber = orbit_fiber(p)
            assert len(fiber) == orbit_fiber_size(p)
            assert fiber == sorted(fiber)
            for t in fiber:
                assert orbits(t) == p
            # no other non-decreasing map has this orbit partition
            matching = [t for t in all_nondecreasing(n) if orbits(t) == p]
            assert matching == fiber


def test_fiber_size_bound_with_equality_condition():
    for n in range(1, 8):
        for p in all_partitions(n):
            r = len(p.blocks)
            size = orbit_fiber_size(p)
            assert size <= math.factorial(n - r)
            nontrivial = sum(1 for b in p.blocks if len(b) > 1)
            assert (size == math.factorial(n - r)) == (nontrivial <= 1)


def test_all_partitions_counts_and_cap():
    for n in range(1, 9):
        parts = all_partitions(n)
        assert len(parts) == BELL[n - 1]
        assert len(set(parts)) == len(parts)
        assert parts == sorted(parts)
    with pytest.raises(ResourceLimitError):
        all_partitions(9)
    assert len(all_partitions(9, cap=9)) == 21147
