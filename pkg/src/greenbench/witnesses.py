"""Extremal witnesses for the state-complexity bounds.

Each construction here attains one of the tight bounds checked by the
verification module: the factorial bound for R-trivial languages, the
floor(e * (n-1)!) bound for J-trivial languages, and the 2^(n-1) bound for
the reversal of a J-trivial language.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .automata import Dfa, dfa_from_transformations
from .errors import InternalError, ResourceLimitError
from .partitions import coarsest_with_maxima, orbit_fiber
from .semigroups import TransformationSemigroup, close
from .transformations import Transformation, identity, singular

__all__ = [
    "WitnessBundle",
    "nondecreasing_generators",
    "r_trivial_witness",
    "subsets_with_top",
    "fixing_generator",
    "j_trivial_generators",
    "extremal_j_trivial_monoid",
    "reversal_witness",
    "minimal_generating_subset",
    "witness_bundle",
    "WITNESS_KINDS",
    "DEFAULT_WITNESS_CAP",
]

DEFAULT_WITNESS_CAP = 8

# closure of the set below is quadratic in its size; skip beyond this
_CLOSURE_ASSERT_LIMIT = 6


def nondecreasing_generators(n: int) -> list[Transformation]:
    """The identity plus every map fixing all states but one, which it
    pushes to a strictly larger state.  These 1 + n(n-1)/2 maps generate
    the monoid of all non-decreasing maps.  Canonical order."""
    if n < 1:
        raise ValueError(f"state set size must be positive, got {n}")
    gens = [identity(n)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            gens.append(singular(n, i, j))
    gens.sort()
    return gens


def _generator_name(t: Transformation) -> str:
    moved = [k for k, image in enumerate(t.images, start=1) if image != k]
    if not moved:
        return "g0"
    i = moved[0]
    return f"g{i}{t.images[i - 1]}"


def r_trivial_witness(n: int, cap: int = DEFAULT_WITNESS_CAP) -> Dfa:
    """DFA on n states whose letters are the non-decreasing generators;
    its language meets the factorial bound on syntactic complexity."""
    if n < 2:
        raise ValueError(f"witness needs at least 2 states, got {n}")
    if n > cap:
        raise ResourceLimitError(f"witness construction capped at {cap} states, got {n}")
    named = [(_generator_name(t), t) for t in nondecreasing_generators(n)]
    return dfa_from_transformations(named, 1, [n])


def subsets_with_top(n: int) -> list[tuple[int, ...]]:
    """All subsets of {1, ..., n} containing n, largest first and then in
    lexicographic order."""
    if n < 1:
        raise ValueError(f"state set size must be positive, got {n}")
    out = []
    for r in range(n - 1, -1, -1):
        for combo in itertools.combinations(range(1, n), r):
            out.append(combo + (n,))
    return out


def fixing_generator(n: int, fixed: Iterable[int]) -> Transformation:
    """The canonical non-decreasing map whose fixed points are exactly the
    given set, which must contain n.

    With h the largest state outside the set, the map fixes the set, sends
    h to n and every other state to h."""
    tops = frozenset(fixed)
    if not tops <= set(range(1, n + 1)):
        raise ValueError(f"fixed set {sorted(tops)} not a subset of 1..{n}")
    if n not in tops:
        raise ValueError(f"fixed set must contain the top state {n}")
    if len(tops) == n:
        return identity(n)
    h = max(set(range(1, n + 1)) - tops)
    imgs = []
    for i in range(1, n + 1):
        if i in tops:
            imgs.append(i)
        elif i == h:
            imgs.append(n)
        else:
            imgs.append(h)
    return Transformation(imgs)


def j_trivial_generators(n: int, cap: int = DEFAULT_WITNESS_CAP) -> list[Transformation]:
    """One fixing generator per subset containing n, in canonical order;
    2^(n-1) maps that generate the extremal J-trivial monoid."""
    if n > cap:
        raise ResourceLimitError(f"generator family capped at {cap} states, got {n}")
    return sorted(fixing_generator(n, z) for z in subsets_with_top(n))


def extremal_j_trivial_monoid(n: int, cap: int = DEFAULT_WITNESS_CAP) -> TransformationSemigroup:
    """The largest J-trivial monoid of transformations of {1, ..., n},
    assembled directly as the union of orbit fibers of the coarsest
    partitions with prescribed maxima.  Size floor(e * (n-1)!) for n >= 2."""
    if n < 1:
        raise ValueError(f"state set size must be positive, got {n}")
    if n > cap:
        raise ResourceLimitError(f"witness construction capped at {cap} states, got {n}")
    members: set[Transformation] = set()
    for z in subsets_with_top(n):
        members.update(orbit_fiber(coarsest_with_maxima(n, z)))
    elements = tuple(sorted(members))
    result = TransformationSemigroup(n, elements, elements)
    if n <= _CLOSURE_ASSERT_LIMIT and not result.verify_closed():
        raise InternalError("direct construction is not closed under composition")
    return result


def reversal_witness(n: int) -> Dfa:
    """DFA on n states with n-1 letters whose reversal needs 2^(n-1)
    states.  Letter a_i shifts 1..i-1 up by one, sends i to n and fixes
    the rest; state 1 is initial and n is final."""
    if n < 2:
        raise ValueError(f"witness needs at least 2 states, got {n}")
    named = []
    for i in range(1, n):
        imgs = []
        for j in range(1, n + 1):
            if j <= i - 1:
                imgs.append(j + 1)
            elif j == i:
                imgs.append(n)
            else:
                imgs.append(j)
        named.append((f"a{i}", Transformation(imgs)))
    return dfa_from_transformations(named, 1, [n])


def minimal_generating_subset(
    n: int, cap: int = 4
) -> tuple[Transformation, ...]:
    """Smallest subset of the extremal J-trivial monoid that generates it,
    found by brute force over element subsets in canonical order.

    A search harness only: it reports what it finds at desk scale and
    proves nothing beyond that."""
    if n > cap:
        raise ResourceLimitError(f"generator search capped at {cap} states, got {n}")
    monoid = extremal_j_trivial_monoid(n)
    target = set(monoid.elements)
    # only the identity has full rank, so it must be picked; search the rest
    one = identity(n)
    rest = [t for t in monoid.elements if t != one]
    for k in range(0, len(rest) + 1):
        for combo in itertools.combinations(rest, k):
            candidate = (one,) + combo
            if set(close(candidate).elements) == target:
                return candidate
    raise InternalError("the monoid failed to generate itself")


_KIND_R = "r-trivial-dfa"
_KIND_REV = "reversal-dfa"
_KIND_GENS = "j-trivial-generators"
_KIND_MONOID = "j-trivial-monoid"

WITNESS_KINDS = (_KIND_R, _KIND_REV, _KIND_GENS, _KIND_MONOID)


@dataclass(frozen=True)
class WitnessBundle:
    """A named witness object ready for emission.

    payload is a Dfa for the DFA kinds, a tuple of (name, map) pairs for
    the generator kind, and a TransformationSemigroup for the monoid kind.
    """

    kind: str
    n: int
    payload: Union[Dfa, tuple, TransformationSemigroup]


def _mask_name(t: Transformation) -> str:
    # the fixed-point set determines the generator; encode it as a bitmask
    fixed = [k for k, image in enumerate(t.images, start=1) if image == k]
    mask = sum(1 << (k - 1) for k in fixed)
    return f"t{mask}"


def witness_bundle(kind: str, n: int, cap: int = DEFAULT_WITNESS_CAP) -> WitnessBundle:
    """Build the witness of the given kind at size n."""
    if kind == _KIND_R:
        return WitnessBundle(kind, n, r_trivial_witness(n, cap=cap))
    if kind == _KIND_REV:
        return WitnessBundle(kind, n, reversal_witness(n))
    if kind == _KIND_GENS:
        gens = j_trivial_generators(n, cap=cap)
        named = tuple((_mask_name(t), t) for t in gens)
        return WitnessBundle(kind, n, named)
    if kind == _KIND_MONOID:
        return WitnessBundle(kind, n, extremal_j_trivial_monoid(n, cap=cap))
    raise ValueError(f"unknown witness kind {kind!r}")
