"""Partitions of {1, ..., n}: the refinement lattice and orbit structure.

Partitions are ordered by refinement; ``meet`` intersects blocks and
``join`` merges overlapping ones.  ``orbits`` maps a transformation to the
partition whose blocks are the connected components of its action graph.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable

from ._util import UnionFind
from .errors import DimensionError, ResourceLimitError
from .transformations import Transformation

__all__ = [
    "Partition",
    "orbits",
    "coarsest_with_maxima",
    "orbit_fiber",
    "orbit_fiber_size",
    "all_partitions",
    "DEFAULT_PARTITION_CAP",
]

DEFAULT_PARTITION_CAP = 8


class Partition:
    """A partition of {1, ..., n} into non-empty blocks.

    Blocks are stored sorted internally and ordered by their smallest
    member, so equal partitions compare and hash equal.
    """

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]) -> None:
        if n < 1:
            raise ValueError(f"state set size must be positive, got {n}")
        norm = []
        for block in blocks:
            b = tuple(sorted(block))
            if not b:
                raise ValueError("empty block")
            if len(set(b)) != len(b):
                raise ValueError(f"repeated state inside block {b}")
            norm.append(b)
        norm.sort(key=lambda b: b[0])
        seen = [x for b in norm for x in b]
        if sorted(seen) != list(range(1, n + 1)):
            raise ValueError(f"blocks do not partition 1..{n}")
        self.n = n
        self.blocks = tuple(norm)

    def _labels(self) -> list[int]:
        # labels[x - 1] = index of the block containing x
        labels = [0] * self.n
        for i, block in enumerate(self.blocks):
            for x in block:
                labels[x - 1] = i
        return labels

    def refines(self, other: "Partition") -> bool:
        """True when every block of self sits inside a block of other."""
        if self.n != other.n:
            raise DimensionError(f"partitions of {self.n} and {other.n} states")
        labels = other._labels()
        return all(len({labels[x - 1] for x in block}) == 1 for block in self.blocks)

    def meet(self, other: "Partition") -> "Partition":
        """Coarsest common refinement -- blockwise intersections."""
        if self.n != other.n:
            raise DimensionError(f"partitions of {self.n} and {other.n} states")
        mine, theirs = self._labels(), other._labels()
        groups: dict[tuple[int, int], list[int]] = {}
        for x in range(1, self.n + 1):
            groups.setdefault((mine[x - 1], theirs[x - 1]), []).append(x)
        return Partition(self.n, groups.values())

    def join(self, other: "Partition") -> "Partition":
        """Finest common coarsening -- merge overlapping blocks."""
        if self.n != other.n:
            raise DimensionError(f"partitions of {self.n} and {other.n} states")
        uf = UnionFind(self.n)
        for block in itertools.chain(self.blocks, other.blocks):
            for x in block[1:]:
                uf.union(block[0] - 1, x - 1)
        return Partition(self.n, [[x + 1 for x in c] for c in uf.components()])

    __and__ = meet
    __or__ = join

    def block_maxima(self) -> frozenset[int]:
        """The largest member of each block."""
        return frozenset(block[-1] for block in self.blocks)

    @classmethod
    def finest(cls, n: int) -> "Partition":
        return cls(n, [[x] for x in range(1, n + 1)])

    @classmethod
    def coarsest(cls, n: int) -> "Partition":
        return cls(n, [range(1, n + 1)])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Partition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __lt__(self, other: "Partition") -> bool:
        return (self.n, self.blocks) < (other.n, other.blocks)

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"

    def __repr__(self) -> str:
        return f"Partition({self.n}, {[list(b) for b in self.blocks]})"


def orbits(t: Transformation) -> Partition:
    """Connected components of the graph joining each state to its image."""
    uf = UnionFind(t.n)
    for x, y in enumerate(t.images, start=1):
        uf.union(x - 1, y - 1)
    return Partition(t.n, [[x + 1 for x in c] for c in uf.components()])


def coarsest_with_maxima(n: int, maxima: Iterable[int]) -> Partition:
    """The coarsest partition of {1, ..., n} whose block maxima are exactly
    the given set, which must contain n.

    Members of the set other than n become singletons; everything else is
    gathered into the block of n.
    """
    tops = frozenset(maxima)
    if not tops <= set(range(1, n + 1)):
        raise ValueError(f"maxima {sorted(tops)} not a subset of 1..{n}")
    if n not in tops:
        raise ValueError(f"maxima must contain the top state {n}")
    singles = tops - {n}
    rest = [x for x in range(1, n + 1) if x not in singles]
    return Partition(n, [[s] for s in singles] + [rest])


def orbit_fiber(p: Partition) -> list[Transformation]:
    """All non-decreasing maps whose orbit partition equals p, in canonical
    order.

    Within each block every non-maximal state picks a strictly larger state
    of the same block; block maxima stay fixed.  Forward iteration then
    climbs to the block maximum, so the orbit partition is exactly p.
    """
    slots: list[tuple[int, tuple[int, ...]]] = []
    for block in p.blocks:
        for i, state in enumerate(block[:-1]):
            slots.append((state, block[i + 1 :]))
    base = list(range(1, p.n + 1))
    out = []
    for choice in itertools.product(*(cands for _, cands in slots)):
        imgs = base.copy()
        for (state, _), image in zip(slots, choice):
            imgs[state - 1] = image
        out.append(Transformation(imgs))
    out.sort()
    return out


def orbit_fiber_size(p: Partition) -> int:
    """len(orbit_fiber(p)) computed as the product of (block size - 1)!."""
    return math.prod(math.factorial(len(block) - 1) for block in p.blocks)


def all_partitions(n: int, cap: int = DEFAULT_PARTITION_CAP) -> list[Partition]:
    """Every partition of {1, ..., n}, in canonical order."""
    if n < 1:
        raise ValueError(f"state set size must be positive, got {n}")
    if n > cap:
        raise ResourceLimitError(f"partition enumeration capped at {cap} states, got {n}")
    shapes: list[list[tuple[int, ...]]] = [[]]
    for x in range(1, n + 1):
        grown = []
        for shape in shapes:
            for i in range(len(shape)):
                grown.append(shape[:i] + [shape[i] + (x,)] + shape[i + 1 :])
            grown.append(shape + [(x,)])
        shapes = grown
    return sorted(Partition(n, shape) for shape in shapes)
