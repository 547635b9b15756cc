"""Outcome spaces, events as bit masks, and Cartesian squares."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ArgumentError, CapacityError, DisjointnessError, IndexRangeError
from .gf2 import iter_bits

MAX_OUTCOMES = 16


@dataclass(frozen=True)
class OutcomeSpace:
    """Outcomes are labelled 1..n; bit ``i-1`` of an event mask stands for outcome ``i``."""

    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_OUTCOMES:
            raise CapacityError(f"outcome count must be in 1..{MAX_OUTCOMES}, got {self.n}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_events(self) -> int:
        return 1 << self.n

    @property
    def dim(self) -> int:
        """Dimension n(n+1)/2 of the coevent space."""
        return self.n * (self.n + 1) // 2

    @property
    def empty(self) -> Event:
        return Event(self, 0)

    @property
    def omega(self) -> Event:
        return Event(self, self.full_mask)

    def event(self, *outcomes: int) -> Event:
        return Event.of(self, outcomes)

    def singleton(self, i: int) -> Event:
        return Event.of(self, (i,))

    def events(self) -> Iterator[Event]:
        """All 2^n events in mask order."""
        for mask in range(self.num_events):
            yield Event(self, mask)

    def outcomes(self) -> range:
        return range(1, self.n + 1)


@dataclass(frozen=True)
class Event:
    space: OutcomeSpace
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.space.n:
            raise IndexRangeError(f"event mask {self.mask:#x} has outcomes beyond n={self.space.n}")

    @classmethod
    def of(cls, space: OutcomeSpace, outcomes: Iterable[int]) -> Event:
        mask = 0
        for i in outcomes:
            if not 1 <= i <= space.n:
                raise IndexRangeError(f"outcome {i} not in 1..{space.n}")
            mask |= 1 << (i - 1)
        return cls(space, mask)

    def elements(self) -> tuple[int, ...]:
        return tuple(b + 1 for b in iter_bits(self.mask))

    def __iter__(self):
        return iter(self.elements())

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.space.n and bool((self.mask >> (i - 1)) & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check(self, other: Event) -> None:
        if self.space != other.space:
            raise ArgumentError("events from different outcome spaces")

    def __and__(self, other: Event) -> Event:
        self._check(other)
        return Event(self.space, self.mask & other.mask)

    def __or__(self, other: Event) -> Event:
        self._check(other)
        return Event(self.space, self.mask | other.mask)

    def __xor__(self, other: Event) -> Event:
        self._check(other)
        return Event(self.space, self.mask ^ other.mask)

    def complement(self) -> Event:
        return Event(self.space, self.space.full_mask & ~self.mask)

    def disjoint_union(self, other: Event) -> Event:
        self._check(other)
        if self.mask & other.mask:
            raise DisjointnessError(f"{self} and {other} are not disjoint")
        return Event(self.space, self.mask | other.mask)

    def issubset(self, other: Event) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: Event) -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.elements()) + "}"


def _complement_of_first(a: Event, b: Event) -> Event:
    a._check(b)
    return a.complement()


_OPS = {
    "intersection": Event.__and__,
    "union": Event.__or__,
    "complement-of-first": _complement_of_first,
    "symmetric-difference": Event.__xor__,
    "disjoint-union": Event.disjoint_union,
}


def combine(a: Event, b: Event, op: str) -> Event:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ArgumentError(f"unknown event operation {op!r}; expected one of {sorted(_OPS)}") from None
    return fn(a, b)


@dataclass(frozen=True)
class ProductEvent:
    """Subset of Omega x Omega; pair (i, j) sits at bit (i-1)*n + (j-1)."""

    space: OutcomeSpace
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> (self.space.n * self.space.n):
            raise IndexRangeError("product event has pairs beyond n*n")

    @staticmethod
    def pair_bit(n: int, i: int, j: int) -> int:
        return (i - 1) * n + (j - 1)

    @classmethod
    def of(cls, space: OutcomeSpace, pairs: Iterable[tuple[int, int]]) -> ProductEvent:
        mask = 0
        for i, j in pairs:
            if not (1 <= i <= space.n and 1 <= j <= space.n):
                raise IndexRangeError(f"pair ({i},{j}) outside 1..{space.n}")
            mask |= 1 << cls.pair_bit(space.n, i, j)
        return cls(space, mask)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        n = self.space.n
        return tuple((b // n + 1, b % n + 1) for b in iter_bits(self.mask))

    def __contains__(self, pair: tuple[int, int]) -> bool:
        i, j = pair
        if not (1 <= i <= self.space.n and 1 <= j <= self.space.n):
            return False
        return bool((self.mask >> self.pair_bit(self.space.n, i, j)) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def product_space(self) -> OutcomeSpace:
        """The outcome space whose events are subsets of Omega x Omega."""
        return OutcomeSpace(self.space.n * self.space.n)


def square(a: Event) -> ProductEvent:
    n = a.space.n
    mask = 0
    # row i of the square is a copy of a's mask shifted to block i
    for i in a.elements():
        mask |= a.mask << ((i - 1) * n)
    return ProductEvent(a.space, mask)


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, largest first, ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
