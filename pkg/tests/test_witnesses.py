import math

import pytest

from greenbench import (
    ResourceLimitError,
    Transformation,
    WITNESS_KINDS,
    WitnessBundle,
    close,
    extremal_j_trivial_monoid,
    fixed_points,
    fixing_generator,
    identity,
    is_h_trivial,
    is_j_trivial,
    is_l_trivial,
    is_nondecreasing,
    is_r_trivial,
    j_trivial_bound,
    j_trivial_generators,
    letter_transformation,
    minimal_generating_subset,
    monoid_completion,
    nondecreasing_generators,
    orbit_join_property,
    r_trivial_witness,
    reachable_subsets,
    reversal_witness,
    reverse,
    singular,
    subsets_with_top,
    witness_bundle,
)

T = Transformation

SEVEN_NONDECREASING_GENERATORS_N4 = [
    (1, 2, 3, 4),
    (1, 2, 4, 4),
    (1, 3, 3, 4),
    (1, 4, 3, 4),
    (2, 2, 3, 4),
    (3, 2, 3, 4),
    (4, 2, 3, 4),
]

SIXTEEN_FIXING_GENERATORS_N5 = [
    (1, 2, 3, 4, 5),
    (1, 2, 3, 5, 5),
    (1, 2, 4, 5, 5),
    (1, 2, 5, 4, 5),
    (1, 3, 5, 4, 5),
    (1, 4, 3, 5, 5),
    (1, 4, 4, 5, 5),
    (1, 5, 3, 4, 5),
    (2, 5, 3, 4, 5),
    (3, 2, 5, 4, 5),
    (3, 3, 5, 4, 5),
    (4, 2, 3, 5, 5),
    (4, 2, 4, 5, 5),
    (4, 4, 3, 5, 5),
    (4, 4, 4, 5, 5),
    (5, 2, 3, 4, 5),
]


def test_nondecreasing_generator_counts():
    for n in range(2, 9):
        gens = nondecreasing_generators(n)
        assert len(gens) == 1 + n * (n - 1) // 2
        assert gens[0] == identity(n)
        assert gens == sorted(gens)
        assert len(set(gens)) == len(gens)
        assert all(is_nondecreasing(t) for t in gens)


def test_nondecreasing_generators_n4_exact():
    gens = nondecreasing_generators(4)
    assert [t.images for t in gens] == SEVEN_NONDECREASING_GENERATORS_N4
    expected = {identity(4)} | {
        singular(4, i, j) for i in range(1, 5) for j in range(i + 1, 5)
    }
    assert set(gens) == expected


def test_nondecreasing_generators_close_to_factorial():
    for n in range(2, 7):
        S = close(nondecreasing_generators(n))
        assert len(S) == math.factorial(n)
        assert all(is_nondecreasing(t) for t in S)
        assert is_r_trivial(S)
        assert is_j_trivial(S) == (n < 3)


def test_nondecreasing_generators_drop_one_minimal():
    for n in (3, 4):
        gens = nondecreasing_generators(n)
        full = math.factorial(n)
        for skip in range(1, len(gens)):
            rest = [g for k, g in enumerate(gens) if k != skip]
            assert len(close(rest)) < full


def test_r_trivial_witness_structure():
    for n in range(2, 7):
        d = r_trivial_witness(n)
        assert d.n == n
        assert d.initial == 1
        assert d.finals == frozenset({n})
        letters = [letter_transformation(d, a) for a in d.alphabet]
        assert letters == nondecreasing_generators(n)
    d = r_trivial_witness(3)
    assert d.alphabet == ("g0", "g23", "g12", "g13")
    with pytest.raises(ResourceLimitError):
        r_trivial_witness(9)
    with pytest.raises(ValueError):
        r_trivial_witness(1)


def test_subsets_with_top_order():
    assert subsets_with_top(4) == [
        (1, 2, 3, 4),
        (1, 2, 4),
        (1, 3, 4),
        (2, 3, 4),
        (1, 4),
        (2, 4),
        (3, 4),
        (4,),
    ]
    for n in range(1, 9):
        subsets = subsets_with_top(n)
        assert len(subsets) == 2 ** (n - 1)
        assert all(z[-1] == n for z in subsets)
        assert len(set(subsets)) == len(subsets)


def test_fixing_generator_oracles():
    assert fixing_generator(5, {1, 3, 4, 5}) == T([1, 5, 3, 4, 5])
    assert fixing_generator(5, {4, 5}) == T([3, 3, 5, 4, 5])
    assert fixing_generator(5, {5}) == T([4, 4, 4, 5, 5])
    assert fixing_generator(3, {1, 2, 3}) == identity(3)


def test_fixing_generator_fixes_exactly_target():
    for n in range(2, 7):
        for z in subsets_with_top(n):
            t = fixing_generator(n, z)
            assert is_nondecreasing(t)
            assert fixed_points(t) == frozenset(z)
    with pytest.raises(ValueError):
        fixing_generator(4, {1, 2})
    with pytest.raises(ValueError):
        fixing_generator(4, set())
    with pytest.raises(ValueError):
        fixing_generator(4, {2, 4, 7})


def test_j_trivial_generators_n5_exact():
    gens = j_trivial_generators(5)
    assert [t.images for t in gens] == SIXTEEN_FIXING_GENERATORS_N5


def test_j_trivial_generators_counts_and_cap():
    for n in range(2, 9):
        gens = j_trivial_generators(n)
        assert len(gens) == 2 ** (n - 1)
        assert gens == sorted(gens)
    with pytest.raises(ResourceLimitError):
        j_trivial_generators(9)
    assert len(j_trivial_generators(9, cap=9)) == 256


def test_extremal_monoid_sizes():
    for n in range(2, 7):
        S = extremal_j_trivial_monoid(n)
        assert len(S) == j_trivial_bound(n)
        assert identity(n) in S
        assert is_j_trivial(S)
        assert orbit_join_property(S)


def test_extremal_monoid_fiber_sizes():
    S = extremal_j_trivial_monoid(4)
    by_fix = {}
    for t in S:
        by_fix.setdefault(fixed_points(t), []).append(t)
    sizes = [len(by_fix[frozenset(z)]) for z in subsets_with_top(4)]
    assert sizes == [1, 1, 1, 1, 2, 2, 2, 6]
    assert sum(sizes) == 16


def test_generators_close_to_extremal_monoid():
    for n in range(2, 6):
        S = close(j_trivial_generators(n))
        assert S == extremal_j_trivial_monoid(n)
        assert len(S) == j_trivial_bound(n)


def test_extremal_monoid_n3_exact():
    S = extremal_j_trivial_monoid(3)
    assert sorted(t.images for t in S) == [
        (1, 2, 3),
        (1, 3, 3),
        (2, 3, 3),
        (3, 2, 3),
        (3, 3, 3),
    ]


def test_reversal_witness_blowup():
    for n in range(2, 11):
        d = reversal_witness(n)
        assert d.n == n
        assert d.initial == 1
        assert d.finals == frozenset({n})
        assert len(d.alphabet) == n - 1
        subsets = reachable_subsets(reverse(d))
        assert len(subsets) == 2 ** (n - 1)
        assert all(n in P for P in subsets)


def test_reversal_witness_letters():
    d = reversal_witness(4)
    assert letter_transformation(d, "a1") == T([4, 2, 3, 4])
    assert letter_transformation(d, "a2") == T([2, 4, 3, 4])
    assert letter_transformation(d, "a3") == T([2, 3, 4, 4])
    S = monoid_completion(close([letter_transformation(d, a) for a in d.alphabet]))
    assert is_j_trivial(S)


def test_minimal_generating_subset():
    assert minimal_generating_subset(2) == tuple(j_trivial_generators(2))
    assert minimal_generating_subset(3) == tuple(j_trivial_generators(3))
    with pytest.raises(ResourceLimitError):
        minimal_generating_subset(5)


def test_witness_bundle_dispatch():
    assert set(WITNESS_KINDS) == {
        "r-trivial-dfa",
        "reversal-dfa",
        "j-trivial-generators",
        "j-trivial-monoid",
    }
    b = witness_bundle("r-trivial-dfa", 3)
    assert isinstance(b, WitnessBundle)
    assert b.kind == "r-trivial-dfa" and b.n == 3
    assert b.payload == r_trivial_witness(3)
    assert witness_bundle("reversal-dfa", 3).payload == reversal_witness(3)
    named = witness_bundle("j-trivial-generators", 3).payload
    assert [t for _, t in named] == j_trivial_generators(3)
    assert [name for name, _ in named] == ["t7", "t5", "t4", "t6"]
    S = witness_bundle("j-trivial-monoid", 3).payload
    assert len(S) == 5
    with pytest.raises(ValueError):
        witness_bundle("no-such-kind", 3)
    with pytest.raises(ResourceLimitError):
        witness_bundle("j-trivial-monoid", 9)
    assert witness_bundle("reversal-dfa", 12).payload.n == 12


def test_witness_monoids_green_profile():
    for n in (3, 4):
        S = monoid_completion(close(nondecreasing_generators(n)))
        assert is_r_trivial(S) and is_h_trivial(S)
        assert not is_l_trivial(S) and not is_j_trivial(S)
        E = extremal_j_trivial_monoid(n)
        assert is_r_trivial(E) and is_l_trivial(E) and is_j_trivial(E) and is_h_trivial(E)
