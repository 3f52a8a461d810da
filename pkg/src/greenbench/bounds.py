"""Bound formulas and the verification report.

The three bounds: n! for syntactic complexity of R-trivial languages,
floor(e * (n-1)!) for J-trivial languages, and 2^(n-1) for the quotient
complexity of the reversal of a J-trivial language.  Everything is exact
integer arithmetic; floating point never enters the counting.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

from .automata import DEFAULT_SUBSET_CAP, reversal_complexity
from .errors import ResourceLimitError
from .semigroups import (
    DEFAULT_CLOSURE_CAP,
    TransformationSemigroup,
    close,
    _join_labels,
    _orbit_labels,
)
from .transformations import Transformation
from .witnesses import (
    DEFAULT_WITNESS_CAP,
    j_trivial_generators,
    nondecreasing_generators,
    reversal_witness,
)

__all__ = [
    "j_trivial_bound",
    "floor_e_factorial",
    "all_nondecreasing",
    "max_j_trivial_submonoid",
    "BoundsRow",
    "bounds_report",
    "DEFAULT_ENUMERATION_CAP",
    "DEFAULT_BRUTE_FORCE_CAP",
]

DEFAULT_ENUMERATION_CAP = 8
DEFAULT_BRUTE_FORCE_CAP = 4


def j_trivial_bound(n: int) -> int:
    """Largest possible size of a J-trivial monoid of transformations of
    {1, ..., n}: the sum over r of C(n-1, r-1) * (n-r)!."""
    if n < 1:
        raise ValueError(f"state set size must be positive, got {n}")
    return sum(math.comb(n - 1, r - 1) * math.factorial(n - r) for r in range(1, n + 1))


def floor_e_factorial(n: int) -> int:
    """floor(e * (n-1)!) computed exactly as sum of (n-1)!/k! for k < n.

    The truncated series already equals the floor once n >= 2; at n = 1
    the two sides differ, so smaller arguments are rejected."""
    if n < 2:
        raise ValueError(f"closed form requires n >= 2, got {n}")
    f = math.factorial(n - 1)
    return sum(f // math.factorial(k) for k in range(n))


def all_nondecreasing(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Transformation]:
    """Every non-decreasing map of {1, ..., n} in canonical order; there
    are n! of them."""
    if n < 1:
        raise ValueError(f"state set size must be positive, got {n}")
    if n > cap:
        raise ResourceLimitError(f"enumeration capped at {cap} states, got {n}")
    ranges = [range(k, n + 1) for k in range(1, n + 1)]
    return [Transformation(images) for images in itertools.product(*ranges)]


def max_j_trivial_submonoid(
    n: int, cap: int = DEFAULT_BRUTE_FORCE_CAP
) -> tuple[int, TransformationSemigroup]:
    """Maximum-cardinality J-trivial submonoid of the non-decreasing maps,
    found by exhaustive search.

    Inside the non-decreasing maps, J-triviality of a submonoid is
    equivalent to a pairwise condition: the orbit partition of each product
    must equal the join of the factors' orbit partitions.  The search
    precomputes that compatibility relation, then runs a branch-and-bound
    over candidate sets: branch on the first undecided element in canonical
    order (include first), close under products, prune when the closure
    escapes the undecided pool, when a pair turns incompatible, or when the
    remaining pool cannot beat the best size found.  The first maximum
    encountered is returned, so the witness is deterministic."""
    if n > cap:
        raise ResourceLimitError(f"brute-force search capped at {cap} states, got {n}")
    maps = all_nondecreasing(n)
    count = len(maps)
    els0 = [tuple(i - 1 for i in t.images) for t in maps]
    index = {t: i for i, t in enumerate(els0)}
    mul = [
        [index[tuple(b[x] for x in a)] for b in els0]
        for a in els0
    ]
    labels = [_orbit_labels(t) for t in els0]
    join_memo: dict[tuple[int, int], tuple[int, ...]] = {}

    def ok(i: int, j: int) -> bool:
        key = (i, j) if i <= j else (j, i)
        joined = join_memo.get(key)
        if joined is None:
            joined = _join_labels(labels[i], labels[j])
            join_memo[key] = joined
        return labels[mul[i][j]] == joined and labels[mul[j][i]] == joined

    compat = []
    for i in range(count):
        mask = 0
        for j in range(count):
            if ok(i, j):
                mask |= 1 << j
        compat.append(mask)

    # maps[0] is the identity: non-decreasing images force image >= state,
    # so the identity is the canonical minimum
    candidates = [i for i in range(1, count) if compat[i] & (1 << i)]

    def close_mask(mask: int) -> int:
        members: list[int] = []
        queue = [i for i in range(count) if mask & (1 << i)]
        while queue:
            x = queue.pop()
            members.append(x)
            for m in members:
                for p in (mul[x][m], mul[m][x]):
                    if not mask & (1 << p):
                        mask |= 1 << p
                        queue.append(p)
        return mask

    best_mask = 1
    best_size = 1

    def search(chosen: int, size: int, pool: list[int]) -> None:
        nonlocal best_mask, best_size
        if size > best_size:
            best_size, best_mask = size, chosen
        if not pool or size + len(pool) <= best_size:
            return
        x, rest = pool[0], pool[1:]
        pool_mask = 0
        for p in pool:
            pool_mask |= 1 << p
        # include x
        grown = close_mask(chosen | (1 << x))
        if not grown & ~(chosen | pool_mask):
            added = grown & ~chosen
            fine = True
            bits = added
            while bits:
                low = bits & -bits
                if grown & ~compat[low.bit_length() - 1]:
                    fine = False
                    break
                bits ^= low
            if fine:
                allowed = ~grown
                bits = added
                while bits:
                    low = bits & -bits
                    allowed &= compat[low.bit_length() - 1]
                    bits ^= low
                search(grown, grown.bit_count(), [p for p in rest if allowed & (1 << p)])
        # exclude x
        search(chosen, size, rest)

    search(1, 1, candidates)

    elements = tuple(maps[i] for i in range(count) if best_mask & (1 << i))
    witness = TransformationSemigroup(n, elements, elements)
    return best_size, witness


@dataclass(frozen=True)
class BoundsRow:
    """One row of the verification table.  None in a witness column means
    the value was skipped because a cap excluded it."""

    n: int
    r_bound: int
    j_bound: int
    j_bound_floor_e: int
    reversal_bound: int
    r_witness: int | None
    j_witness: int | None
    reversal_witness: int | None
    brute_force_max: int | None


def _guarded(enabled: bool, compute: Callable[[], int]) -> int | None:
    if not enabled:
        return None
    try:
        return compute()
    except ResourceLimitError:
        return None


def bounds_report(
    max_n: int,
    *,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    brute_max_n: int = 0,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
) -> list[BoundsRow]:
    """Bound values against witnessed values for n = 2..max_n.

    Witness columns are filled only up to witness_cap; the brute-force
    column only up to brute_max_n.  A column that hits a resource cap is
    left empty rather than failing the whole report."""
    if max_n < 2:
        raise ValueError(f"report needs max_n >= 2, got {max_n}")
    rows = []
    for n in range(2, max_n + 1):
        rows.append(
            BoundsRow(
                n=n,
                r_bound=math.factorial(n),
                j_bound=j_trivial_bound(n),
                j_bound_floor_e=floor_e_factorial(n),
                reversal_bound=2 ** (n - 1),
                r_witness=_guarded(
                    n <= witness_cap,
                    lambda n=n: len(close(nondecreasing_generators(n), cap=closure_cap)),
                ),
                j_witness=_guarded(
                    n <= witness_cap,
                    lambda n=n: len(
                        close(j_trivial_generators(n, cap=witness_cap), cap=closure_cap)
                    ),
                ),
                reversal_witness=_guarded(
                    n <= witness_cap,
                    lambda n=n: reversal_complexity(reversal_witness(n), subset_cap=subset_cap),
                ),
                brute_force_max=_guarded(
                    n <= brute_max_n,
                    lambda n=n: max_j_trivial_submonoid(n)[0],
                ),
            )
        )
    return rows
