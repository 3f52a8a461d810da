"""Finite transformation semigroups: closure, ideals, triviality tests.

The triviality predicates (R, L, J, H) compare principal ideals inside the
monoid completion.  Ideals are computed once per semigroup as bitmasks over
the element list and cached, so repeated predicate calls are cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ._util import UnionFind
from .errors import DimensionError, InternalError, ResourceLimitError
from .transformations import (
    Transformation,
    identity,
    is_nondecreasing,
    saturating_successor,
)

__all__ = [
    "TransformationSemigroup",
    "close",
    "monoid_completion",
    "principal_ideals",
    "is_r_trivial",
    "is_l_trivial",
    "is_j_trivial",
    "is_h_trivial",
    "orbit_join_property",
    "adjoin_successor",
    "DEFAULT_CLOSURE_CAP",
]

DEFAULT_CLOSURE_CAP = 10_000_000


class TransformationSemigroup:
    """A set of transformations of {1, ..., n} closed under composition.

    Build instances with close(); the constructor trusts that ``elements``
    is already closed.  Elements are kept in canonical order.
    """

    __slots__ = ("n", "elements", "generators", "_member_set", "_green")

    def __init__(
        self,
        n: int,
        elements: Iterable[Transformation],
        generators: Iterable[Transformation],
    ) -> None:
        self.n = n
        self.elements = tuple(elements)
        self.generators = tuple(generators)
        if not self.elements:
            raise ValueError("a semigroup needs at least one element")
        for t in self.elements + self.generators:
            if t.n != n:
                raise DimensionError(f"element {t} acts on {t.n} states, expected {n}")
        self._member_set = frozenset(self.elements)
        self._green = None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Transformation]:
        return iter(self.elements)

    def __contains__(self, t: object) -> bool:
        return t in self._member_set

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TransformationSemigroup)
            and self.n == other.n
            and self.elements == other.elements
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"TransformationSemigroup(n={self.n}, {len(self.elements)} elements, "
            f"{len(self.generators)} generators)"
        )

    @property
    def contains_identity(self) -> bool:
        return identity(self.n) in self._member_set

    def verify_closed(self) -> bool:
        """Full pairwise product check; quadratic, intended for tests."""
        members = self._member_set
        for t in self.elements:
            for s in self.elements:
                if t * s not in members:
                    return False
        return True


def close(
    generators: Sequence[Transformation], cap: int = DEFAULT_CLOSURE_CAP
) -> TransformationSemigroup:
    """Smallest semigroup containing the generators.

    Worklist closure: every known element is right-multiplied by each
    generator until nothing new appears.  The result is independent of
    generator order because elements are sorted canonically at the end.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    for g in gens[1:]:
        if g.n != n:
            raise DimensionError(f"generator {g} acts on {g.n} states, expected {n}")
    gens0 = [tuple(i - 1 for i in g.images) for g in gens]
    work = list(dict.fromkeys(gens0))
    seen = set(work)
    i = 0
    while i < len(work):
        cur = work[i]
        i += 1
        for g in gens0:
            nxt = tuple(g[x] for x in cur)
            if nxt not in seen:
                if len(seen) >= cap:
                    raise ResourceLimitError(f"closure exceeded cap of {cap} elements")
                seen.add(nxt)
                work.append(nxt)
    elements = tuple(Transformation(tuple(x + 1 for x in t)) for t in sorted(seen))
    return TransformationSemigroup(n, elements, tuple(gens))


def monoid_completion(S: TransformationSemigroup) -> TransformationSemigroup:
    """S itself when it contains the identity, otherwise S with it adjoined."""
    one = identity(S.n)
    if one in S:
        return S
    elements = tuple(sorted(S.elements + (one,)))
    return TransformationSemigroup(S.n, elements, (one,) + S.generators)


@dataclass(frozen=True)
class _GreenMasks:
    # bit i of right[s] says: element i lies in s * M, and so on
    right: tuple[int, ...]
    left: tuple[int, ...]
    two_sided: tuple[int, ...]


def _green_masks(M: TransformationSemigroup) -> _GreenMasks:
    """Principal ideal bitmasks of the monoid M, cached on the instance."""
    cached = M._green
    if cached is not None:
        return cached
    els0 = [tuple(i - 1 for i in t.images) for t in M.elements]
    index = {t: i for i, t in enumerate(els0)}
    count = len(els0)
    right = [0] * count
    left = [0] * count
    for i, a in enumerate(els0):
        acc = 0
        for j, b in enumerate(els0):
            p = index[tuple(b[x] for x in a)]
            bit = 1 << p
            acc |= bit
            left[j] |= bit
        right[i] = acc
    two = []
    for s in range(count):
        # M s M is the union of x M over x in M s
        acc = 0
        mask = left[s]
        while mask:
            low = mask & -mask
            acc |= right[low.bit_length() - 1]
            mask ^= low
        two.append(acc)
    masks = _GreenMasks(tuple(right), tuple(left), tuple(two))
    M._green = masks
    return masks


def _mask_elements(M: TransformationSemigroup, mask: int) -> frozenset[Transformation]:
    out = []
    while mask:
        low = mask & -mask
        out.append(M.elements[low.bit_length() - 1])
        mask ^= low
    return frozenset(out)


def principal_ideals(
    S: TransformationSemigroup, t: Transformation
) -> tuple[frozenset[Transformation], frozenset[Transformation], frozenset[Transformation]]:
    """(tM, Mt, MtM) for t in the monoid completion M of S."""
    M = monoid_completion(S)
    try:
        i = M.elements.index(t)
    except ValueError:
        raise ValueError(f"{t} is not an element of the monoid completion") from None
    masks = _green_masks(M)
    return (
        _mask_elements(M, masks.right[i]),
        _mask_elements(M, masks.left[i]),
        _mask_elements(M, masks.two_sided[i]),
    )


def is_r_trivial(S: TransformationSemigroup) -> bool:
    """No two distinct elements of the monoid completion share a right ideal."""
    M = monoid_completion(S)
    masks = _green_masks(M)
    return len(set(masks.right)) == len(M)


def is_l_trivial(S: TransformationSemigroup) -> bool:
    """No two distinct elements of the monoid completion share a left ideal."""
    M = monoid_completion(S)
    masks = _green_masks(M)
    return len(set(masks.left)) == len(M)


def is_j_trivial(S: TransformationSemigroup) -> bool:
    """No two distinct elements of the monoid completion share a two-sided
    ideal.  A true result is cross-checked against the one-sided predicates,
    which it must imply."""
    M = monoid_completion(S)
    masks = _green_masks(M)
    result = len(set(masks.two_sided)) == len(M)
    if result and (
        len(set(masks.right)) != len(M) or len(set(masks.left)) != len(M)
    ):
        raise InternalError("two-sided ideals separate elements but one-sided do not")
    return result


def is_h_trivial(S: TransformationSemigroup) -> bool:
    """No two distinct elements share both their right and left ideals."""
    M = monoid_completion(S)
    masks = _green_masks(M)
    return len(set(zip(masks.right, masks.left))) == len(M)


def _orbit_labels(t0: tuple[int, ...]) -> tuple[int, ...]:
    # labels[x] = smallest member of the orbit component of x, 0-based
    uf = UnionFind(len(t0))
    for x, y in enumerate(t0):
        uf.union(x, y)
    smallest: dict[int, int] = {}
    for x in range(len(t0)):
        r = uf.find(x)
        if r not in smallest or x < smallest[r]:
            smallest[r] = x
    return tuple(smallest[uf.find(x)] for x in range(len(t0)))


def _join_labels(l1: tuple[int, ...], l2: tuple[int, ...]) -> tuple[int, ...]:
    n = len(l1)
    uf = UnionFind(n)
    for x in range(n):
        uf.union(x, l1[x])
        uf.union(x, l2[x])
    smallest: dict[int, int] = {}
    for x in range(n):
        r = uf.find(x)
        if r not in smallest or x < smallest[r]:
            smallest[r] = x
    return tuple(smallest[uf.find(x)] for x in range(n))


def orbit_join_property(S: TransformationSemigroup) -> bool:
    """True when S consists of non-decreasing maps and the orbit partition
    of every product equals the join of the factors' orbit partitions.

    For monoids of non-decreasing maps this property characterises
    J-triviality, which makes it a fast structural test.
    """
    for t in S.elements:
        if not is_nondecreasing(t):
            return False
    els0 = [tuple(i - 1 for i in t.images) for t in S.elements]
    labels: dict[tuple[int, ...], tuple[int, ...]] = {}
    for t0 in els0:
        labels[t0] = _orbit_labels(t0)
    join_memo: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple[int, ...]] = {}
    for a in els0:
        la = labels[a]
        for b in els0:
            lb = labels[b]
            key = (la, lb)
            joined = join_memo.get(key)
            if joined is None:
                joined = _join_labels(la, lb)
                join_memo[key] = joined
            prod = tuple(b[x] for x in a)
            lp = labels.get(prod)
            if lp is None:
                lp = _orbit_labels(prod)
                labels[prod] = lp
            if lp != joined:
                return False
    return True


def adjoin_successor(S: TransformationSemigroup) -> TransformationSemigroup:
    """Close a J-trivial monoid of non-decreasing maps together with the
    saturating successor map and the identity.  The result is J-trivial
    again; that is verified, not assumed."""
    for t in S.elements:
        if not is_nondecreasing(t):
            raise ValueError(f"element {t} is not non-decreasing")
    if not is_j_trivial(S):
        raise ValueError("expected a J-trivial semigroup")
    gens = list(S.generators)
    for extra in (identity(S.n), saturating_successor(S.n)):
        if extra not in gens:
            gens.append(extra)
    result = close(gens)
    if not is_j_trivial(result):
        raise InternalError("adjoining the successor map broke J-triviality")
    return result
