"""Coevents: degree <= 2 polynomials in the containment maps over Z2.

Coefficient order is fixed throughout the package: a_1..a_n (the linear terms
w_i*), then b_12, b_13, ..., b_{n-1,n} (the quadratic terms w_i*w_j*, i < j,
lexicographic).  A coevent is stored as a D-bit int in that order, D = n(n+1)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import ArgumentError, DisjointnessError, NotACoeventError
from .events import Event, OutcomeSpace, ProductEvent
from .gf2 import Gf2Vector, iter_bits, parity
from .truth import TruthTable


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: n + k for k, pair in enumerate(combinations(range(1, n + 1), 2))}


@lru_cache(maxsize=None)
def monomial_labels(n: int) -> tuple[tuple[int, ...], ...]:
    """Monomial for each coefficient index: (i,) for w_i*, (i, j) for w_i*w_j*."""
    return tuple((i,) for i in range(1, n + 1)) + tuple(combinations(range(1, n + 1), 2))


def coefficient_index(n: int, i: int, j: int | None = None) -> int:
    if j is None or i == j:
        if not 1 <= i <= n:
            raise ArgumentError(f"outcome {i} not in 1..{n}")
        return i - 1
    if i > j:
        i, j = j, i
    try:
        return _pair_index(n)[(i, j)]
    except KeyError:
        raise ArgumentError(f"pair ({i},{j}) not in 1..{n}") from None


@lru_cache(maxsize=1 << 16)
def evaluation_row(n: int, mask: int) -> int:
    """Coefficients that contribute to phi(A): a_i with i in A, b_ij with i, j in A."""
    row = mask
    for (i, j), k in _pair_index(n).items():
        if (mask >> (i - 1)) & 1 and (mask >> (j - 1)) & 1:
            row |= 1 << k
    return row


@dataclass(frozen=True)
class Coevent:
    space: OutcomeSpace
    coeffs: int = 0

    def __post_init__(self):
        if self.coeffs < 0 or self.coeffs >> self.space.dim:
            raise ArgumentError(f"coefficient vector wider than D={self.space.dim}")

    @classmethod
    def zero(cls, space: OutcomeSpace) -> Coevent:
        return cls(space, 0)

    @classmethod
    def from_monomials(cls, space: OutcomeSpace, monomials: Iterable[Sequence[int]]) -> Coevent:
        """Sum of monomials; (i,) is w_i*, (i, j) is w_i*w_j*.  Repeats cancel mod 2."""
        coeffs = 0
        for mono in monomials:
            idx = set(mono)
            if len(idx) == 1:
                (i,) = idx
                coeffs ^= 1 << coefficient_index(space.n, i)
            elif len(idx) == 2:
                i, j = sorted(idx)
                coeffs ^= 1 << coefficient_index(space.n, i, j)
            else:
                raise ArgumentError(f"monomial {tuple(mono)} is not of degree 1 or 2")
        return cls(space, coeffs)

    @classmethod
    def from_vector(cls, space: OutcomeSpace, v: Gf2Vector) -> Coevent:
        if v.length != space.dim:
            raise ArgumentError(f"vector length {v.length} != D={space.dim}")
        return cls(space, v.bits)

    @property
    def vector(self) -> Gf2Vector:
        return Gf2Vector(self.space.dim, self.coeffs)

    @property
    def linear(self) -> tuple[int, ...]:
        return tuple((self.coeffs >> k) & 1 for k in range(self.space.n))

    @property
    def quadratic(self) -> dict[tuple[int, int], int]:
        return {pair: (self.coeffs >> k) & 1 for pair, k in _pair_index(self.space.n).items()}

    def monomials(self) -> list[tuple[int, ...]]:
        labels = monomial_labels(self.space.n)
        return [labels[k] for k in iter_bits(self.coeffs)]

    def __call__(self, a) -> int:
        mask = a.mask if isinstance(a, Event) else int(a)
        return parity(self.coeffs & evaluation_row(self.space.n, mask))

    def __add__(self, other: Coevent) -> Coevent:
        if self.space != other.space:
            raise ArgumentError("coevents over different spaces")
        return Coevent(self.space, self.coeffs ^ other.coeffs)

    def is_zero(self) -> bool:
        return self.coeffs == 0

    def is_unital(self) -> bool:
        return self(self.space.full_mask) == 1

    def __str__(self) -> str:
        from .textio import format_coevent

        return format_coevent(self)


def evaluate(phi: Coevent, a: Event) -> int:
    if a.space != phi.space:
        raise ArgumentError("event and coevent from different spaces")
    return phi(a)


def add(phi: Coevent, psi: Coevent) -> Coevent:
    return phi + psi


def interpolate(space: OutcomeSpace, singles: Sequence[int], doubles: Sequence[int]) -> Coevent:
    """The unique coevent with the given singleton and doubleton values.

    ``doubles`` is indexed like the quadratic coefficients: (1,2), (1,3), ...
    """
    n = space.n
    if len(singles) != n or len(doubles) != n * (n - 1) // 2:
        raise ArgumentError("need n singleton values and n(n-1)/2 doubleton values")
    coeffs = 0
    for i, s in enumerate(singles, start=1):
        if s & 1:
            coeffs |= 1 << (i - 1)
    for ((i, j), k), d in zip(_pair_index(n).items(), doubles):
        if (d ^ singles[i - 1] ^ singles[j - 1]) & 1:
            coeffs |= 1 << k
    return Coevent(space, coeffs)


def low_order_values(f) -> tuple[list[int], list[int]]:
    """Singleton and doubleton values of any event function on a space."""
    space = f.space
    singles = [f(1 << (i - 1)) for i in space.outcomes()]
    doubles = [f((1 << (i - 1)) | (1 << (j - 1))) for i, j in combinations(space.outcomes(), 2)]
    return singles, doubles


def from_table(t: TruthTable) -> Coevent:
    """Read the polynomial off the low-order values, then confirm it on all 2^n events."""
    singles, doubles = low_order_values(t)
    phi = interpolate(t.space, singles, doubles)
    for a in t.space.events():
        if phi(a) != t(a):
            raise NotACoeventError(
                f"table is not a coevent: degree-2 reconstruction differs on {a}", witness=a
            )
    return phi


def to_table(phi: Coevent) -> TruthTable:
    values = 0
    for mask in range(phi.space.num_events):
        if phi(mask):
            values |= 1 << mask
    return TruthTable(phi.space, values)


def enumerate_coevents(space: OutcomeSpace) -> Iterator[Coevent]:
    for coeffs in range(1 << space.dim):
        yield Coevent(space, coeffs)


def partition_identity_holds(phi, parts: Sequence[Event]) -> bool:
    """Check phi(A1 u ... u Am) = sum_{i<j} phi(Ai u Aj) + (m mod 2) sum_i phi(Ai).

    ``phi`` may be a Coevent or a raw TruthTable; anything callable on events works.
    """
    m = len(parts)
    if m < 2:
        raise ArgumentError("need at least two parts")
    union = 0
    for p in parts:
        if union & p.mask:
            raise DisjointnessError("parts must be mutually disjoint")
        union |= p.mask
    rhs = 0
    for a, b in combinations(parts, 2):
        rhs ^= phi(a.mask | b.mask)
    if m % 2:
        for p in parts:
            rhs ^= phi(p.mask)
    return phi(union) == rhs


def pair_identity_holds(phi, outcomes: Sequence[int]) -> bool:
    """The singleton form of :func:`partition_identity_holds`: every part is one outcome."""
    if len(set(outcomes)) != len(outcomes):
        raise ArgumentError("outcomes must be distinct")
    space = phi.space
    return partition_identity_holds(phi, [space.singleton(i) for i in outcomes])


@dataclass(frozen=True)
class PairAdditiveMap:
    """Grade-1 additive map on subsets of Omega x Omega: parity of |generators & E|."""

    space: OutcomeSpace
    generators: tuple[tuple[int, int], ...]

    @property
    def mask(self) -> int:
        n = self.space.n
        m = 0
        for i, j in self.generators:
            m ^= 1 << ProductEvent.pair_bit(n, i, j)
        return m

    def __call__(self, e: ProductEvent) -> int:
        return parity(self.mask & e.mask)

    def to_table(self) -> TruthTable:
        """Its truth table as a function on events of the n*n-outcome product space."""
        product = OutcomeSpace(self.space.n * self.space.n)
        gens = self.mask
        return TruthTable.from_function(product, lambda a: parity(a.mask & gens))


def lift_to_product(phi: Coevent) -> PairAdditiveMap:
    """Canonical lambda with lambda(A x A) = phi(A): (i,i) per linear term, (i,j) per quadratic."""
    gens = [(i, i) for i, a in enumerate(phi.linear, start=1) if a]
    gens += [pair for pair, b in phi.quadratic.items() if b]
    return PairAdditiveMap(phi.space, tuple(gens))


def disjoint_families(space: OutcomeSpace, m: int) -> Iterator[tuple[Event, ...]]:
    """Ordered families of m mutually disjoint nonempty events, each unordered family once."""
    n = space.n

    def rec(start_label: int, assigned: list[int]) -> Iterator[list[int]]:
        if len(assigned) == n:
            yield assigned
            return
        for label in range(0, min(start_label + 1, m) + 1):
            # label 0 = unused; parts are numbered in order of first appearance
            nxt = max(start_label, label)
            yield from rec(nxt, assigned + [label])

    for labels in rec(0, []):
        if max(labels) != m:
            continue
        masks = [0] * m
        for i, lab in enumerate(labels):
            if lab:
                masks[lab - 1] |= 1 << i
        yield tuple(Event(space, mk) for mk in masks)
