"""Arbitrary 1-0 functions on events and their classification.

A :class:`TruthTable` stores one bit per event, packed into an int whose bit
``mask`` is the value on the event with that mask.  Everything here works by
direct enumeration, so it serves as the brute-force oracle for the polynomial
machinery in :mod:`anhomlogic.coevent`.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    ArgumentError,
    CapacityError,
    DegenerateError,
    NotAdditiveError,
    NotMultiplicativeError,
)
from .events import Event, OutcomeSpace, submasks
from .gf2 import iter_bits, parity

MAX_ENUMERATION_N = 4


def _mask(a) -> int:
    return a.mask if isinstance(a, Event) else int(a)


@dataclass(frozen=True)
class TruthTable:
    space: OutcomeSpace
    values: int

    def __post_init__(self):
        if self.values < 0 or self.values >> self.space.num_events:
            raise ArgumentError("table has bits beyond 2^n events")
        if self.values & 1:
            raise ArgumentError("a truth function must vanish on the empty event")

    @classmethod
    def zero(cls, space: OutcomeSpace) -> TruthTable:
        return cls(space, 0)

    @classmethod
    def from_function(cls, space: OutcomeSpace, fn: Callable[[Event], int]) -> TruthTable:
        values = 0
        for a in space.events():
            if fn(a) & 1:
                values |= 1 << a.mask
        return cls(space, values)

    @classmethod
    def from_events(cls, space: OutcomeSpace, events: Iterable[Event]) -> TruthTable:
        """Table equal to 1 exactly on the given events."""
        values = 0
        for a in events:
            values |= 1 << _mask(a)
        return cls(space, values)

    @classmethod
    def containment(cls, space: OutcomeSpace, alpha: int) -> TruthTable:
        """The map alpha*: 1 on events containing outcome ``alpha``."""
        bit = 1 << (alpha - 1)
        if not 1 <= alpha <= space.n:
            raise ArgumentError(f"outcome {alpha} not in 1..{space.n}")
        return cls.from_function(space, lambda a: 1 if a.mask & bit else 0)

    def __call__(self, a) -> int:
        return (self.values >> _mask(a)) & 1

    def bits(self) -> list[int]:
        return [(self.values >> m) & 1 for m in range(self.space.num_events)]

    def ones(self) -> list[Event]:
        return [Event(self.space, m) for m in iter_bits(self.values)]

    def is_zero(self) -> bool:
        return self.values == 0

    def __add__(self, other: TruthTable) -> TruthTable:
        if self.space != other.space:
            raise ArgumentError("tables over different spaces")
        return TruthTable(self.space, self.values ^ other.values)

    def __mul__(self, other: TruthTable) -> TruthTable:
        if self.space != other.space:
            raise ArgumentError("tables over different spaces")
        return TruthTable(self.space, self.values & other.values)


@dataclass(frozen=True)
class ClassificationReport:
    unital: bool
    grade1_additive: bool
    multiplicative: bool
    grade2_additive: bool
    homomorphism: bool
    two_point_condition: bool

    def to_dict(self) -> dict:
        return asdict(self)


def is_unital(t: TruthTable) -> bool:
    return t(t.space.full_mask) == 1


def grade1_violation(t: TruthTable) -> tuple[int, int] | None:
    """First disjoint pair (A, B) with t(A u B) != t(A) + t(B), as masks."""
    v = t.bits()
    full = t.space.full_mask
    for a in range(t.space.num_events):
        for b in submasks(full & ~a):
            if b < a:
                # pairs are unordered; (b, a) was already seen
                continue
            if v[a | b] != v[a] ^ v[b]:
                return a, b
    return None


def is_grade1_additive(t: TruthTable) -> bool:
    return grade1_violation(t) is None


def multiplicative_violation(t: TruthTable) -> tuple[int, int] | None:
    v = t.bits()
    size = t.space.num_events
    for a in range(size):
        for b in range(a, size):
            if v[a & b] != v[a] & v[b]:
                return a, b
    return None


def is_multiplicative(t: TruthTable) -> bool:
    return multiplicative_violation(t) is None


def grade2_violation(t: TruthTable) -> tuple[int, int, int] | None:
    """First mutually disjoint triple A <= B <= C (as masks) breaking the six-term identity."""
    v = t.bits()
    full = t.space.full_mask
    for a in range(t.space.num_events):
        rest_a = full & ~a
        for b in submasks(rest_a):
            if b < a:
                continue
            for c in submasks(rest_a & ~b):
                if c < b:
                    continue
                rhs = v[a | b] ^ v[a | c] ^ v[b | c] ^ v[a] ^ v[b] ^ v[c]
                if v[a | b | c] != rhs:
                    return a, b, c
    return None


def is_grade2_additive(t: TruthTable) -> bool:
    return grade2_violation(t) is None


def interference(t: TruthTable, outcomes: Sequence[int]) -> int:
    """m-point interference: t({a1..am}) + t(a1) + ... + t(am)."""
    if len(outcomes) < 2:
        raise ArgumentError("interference needs at least two outcomes")
    if len(set(outcomes)) != len(outcomes):
        raise ArgumentError(f"outcomes must be distinct, got {tuple(outcomes)}")
    event = Event.of(t.space, outcomes)
    value = t(event)
    for i in outcomes:
        value ^= t(1 << (i - 1))
    return value


def two_point_violation(t: TruthTable) -> tuple[int, ...] | None:
    # both sides are symmetric in the tuple, so one check per subset suffices
    n = t.space.n
    v = t.bits()
    for m in range(3, n + 1):
        for tup in combinations(range(1, n + 1), m):
            mask = 0
            singles = 0
            for i in tup:
                mask |= 1 << (i - 1)
                singles ^= v[1 << (i - 1)]
            lhs = v[mask] ^ singles
            rhs = 0
            for i, j in combinations(tup, 2):
                bi, bj = 1 << (i - 1), 1 << (j - 1)
                rhs ^= v[bi | bj] ^ v[bi] ^ v[bj]
            if lhs != rhs:
                return tup
    return None


def check_two_point(t: TruthTable) -> bool:
    """True iff every m-point interference is the sum of its two-point interferences.

    The m = 2 case holds trivially and is skipped.
    """
    return two_point_violation(t) is None


def classify(t: TruthTable) -> ClassificationReport:
    unital = is_unital(t)
    g1 = is_grade1_additive(t)
    mult = is_multiplicative(t)
    return ClassificationReport(
        unital=unital,
        grade1_additive=g1,
        multiplicative=mult,
        grade2_additive=is_grade2_additive(t),
        homomorphism=unital and g1 and mult,
        two_point_condition=check_two_point(t),
    )


def decompose_additive(t: TruthTable) -> list[int]:
    """Outcomes a1..am with t = a1* + ... + am*."""
    if t.is_zero():
        raise DegenerateError("the zero function has no additive decomposition")
    witness = grade1_violation(t)
    if witness is not None:
        a, b = witness
        raise NotAdditiveError(
            f"not grade-1 additive: disjoint {Event(t.space, a)}, {Event(t.space, b)} break additivity"
        )
    return [i for i in t.space.outcomes() if t(1 << (i - 1))]


def decompose_multiplicative(t: TruthTable) -> Event:
    """Smallest event B with t(B) = 1; then t(A) = 1 iff B is contained in A."""
    if t.is_zero():
        raise DegenerateError("the zero function has no multiplicative decomposition")
    witness = multiplicative_violation(t)
    if witness is not None:
        a, b = witness
        raise NotMultiplicativeError(
            f"not multiplicative on {Event(t.space, a)}, {Event(t.space, b)}"
        )
    smallest = t.space.full_mask
    for m in iter_bits(t.values):
        smallest &= m
    return Event(t.space, smallest)


def table_of_additive(space: OutcomeSpace, outcomes: Iterable[int]) -> TruthTable:
    """Synthesize a1* + ... + am*."""
    bits = 0
    for i in outcomes:
        bits ^= 1 << (i - 1)
    return TruthTable.from_function(space, lambda a: parity(a.mask & bits))


def table_of_multiplicative(b: Event) -> TruthTable:
    """Synthesize the product of b's containment maps."""
    return TruthTable.from_function(b.space, lambda a: 1 if a.mask & b.mask == b.mask else 0)


def enumerate_tables(
    space: OutcomeSpace,
    predicate: Callable[[ClassificationReport], bool] | None = None,
) -> Iterator[TruthTable]:
    """Every table with t(empty) = 0 passing ``predicate``, ordered by table value."""
    if space.n > MAX_ENUMERATION_N:
        raise CapacityError(
            f"table enumeration is limited to n <= {MAX_ENUMERATION_N} (2^(2^n - 1) tables)"
        )
    for k in range(1 << (space.num_events - 1)):
        t = TruthTable(space, k << 1)
        if predicate is None or predicate(classify(t)):
            yield t
