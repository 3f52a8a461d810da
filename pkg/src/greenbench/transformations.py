"""Total transformations of a finite state set {1, ..., n}.

A transformation is stored as its image sequence: entry k (1-indexed) is
the image of state k.  Composition is read left to right, so applying
``compose(t1, t2)`` means applying ``t1`` first and then ``t2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DimensionError

__all__ = [
    "Transformation",
    "TransformationProfile",
    "identity",
    "singular",
    "constant",
    "saturating_successor",
    "compose",
    "range_of",
    "fixed_points",
    "is_idempotent",
    "is_nondecreasing",
    "profile",
]


class Transformation:
    """A total self-map of {1, ..., n} given by its image sequence.

    Instances are immutable; they hash and sort by the image tuple, which
    is the canonical ordering used throughout the package.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]) -> None:
        imgs = tuple(images)
        n = len(imgs)
        if n == 0:
            raise ValueError("a transformation needs at least one state")
        for state, image in enumerate(imgs, start=1):
            if not isinstance(image, int) or not 1 <= image <= n:
                raise ValueError(f"image of state {state} is {image!r}, outside 1..{n}")
        self.images = imgs

    @property
    def n(self) -> int:
        return len(self.images)

    def apply(self, state: int) -> int:
        if not 1 <= state <= self.n:
            raise ValueError(f"state {state} outside 1..{self.n}")
        return self.images[state - 1]

    def __mul__(self, other: "Transformation") -> "Transformation":
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Transformation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Transformation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Transformation") -> bool:
        return self.images <= other.images

    def __str__(self) -> str:
        return "[" + ",".join(str(i) for i in self.images) + "]"

    def __repr__(self) -> str:
        return f"Transformation({list(self.images)})"


@dataclass(frozen=True)
class TransformationProfile:
    range: frozenset[int]
    rank: int
    fixed: frozenset[int]
    idempotent: bool
    non_decreasing: bool


def _check_size(n: int) -> None:
    if n < 1:
        raise ValueError(f"state set size must be positive, got {n}")


def identity(n: int) -> Transformation:
    """The identity map on {1, ..., n}."""
    _check_size(n)
    return Transformation(range(1, n + 1))


def singular(n: int, i: int, j: int) -> Transformation:
    """The map sending i to j and fixing every other state."""
    _check_size(n)
    for state in (i, j):
        if not 1 <= state <= n:
            raise ValueError(f"state {state} outside 1..{n}")
    imgs = list(range(1, n + 1))
    imgs[i - 1] = j
    return Transformation(imgs)


def constant(n: int, j: int) -> Transformation:
    """The map sending every state to j."""
    _check_size(n)
    if not 1 <= j <= n:
        raise ValueError(f"state {j} outside 1..{n}")
    return Transformation([j] * n)


def saturating_successor(n: int) -> Transformation:
    """The map k -> k+1 for k < n, with n fixed."""
    _check_size(n)
    return Transformation(list(range(2, n + 1)) + [n])


def compose(t1: Transformation, t2: Transformation) -> Transformation:
    """Apply t1, then t2."""
    if t1.n != t2.n:
        raise DimensionError(f"cannot compose maps on {t1.n} and {t2.n} states")
    imgs2 = t2.images
    return Transformation(imgs2[i - 1] for i in t1.images)


def range_of(t: Transformation) -> frozenset[int]:
    return frozenset(t.images)


def fixed_points(t: Transformation) -> frozenset[int]:
    return frozenset(k for k, image in enumerate(t.images, start=1) if image == k)


def is_idempotent(t: Transformation) -> bool:
    # t*t == t iff every range element is fixed
    imgs = t.images
    return all(imgs[i - 1] == i for i in set(imgs))


def is_nondecreasing(t: Transformation) -> bool:
    return all(k <= image for k, image in enumerate(t.images, start=1))


def profile(t: Transformation) -> TransformationProfile:
    """Range, rank, fixed points, idempotency and monotonicity of t."""
    rng = range_of(t)
    return TransformationProfile(
        range=rng,
        rank=len(rng),
        fixed=fixed_points(t),
        idempotent=is_idempotent(t),
        non_decreasing=is_nondecreasing(t),
    )
