"""Projections on the coevent space and the master observable.

A projection is an idempotent D x D matrix over GF(2) acting on coefficient
columns in the order fixed by :mod:`anhomlogic.coevent`; column ``c`` of the
matrix is the image of basis coevent ``c``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict, field
from functools import cached_property
from typing import Iterable, Sequence

from .coevent import Coevent, coefficient_index, monomial_labels
from .errors import IncompatibleError, NotIdempotentError, ShapeError
from .events import Event, OutcomeSpace
from .gf2 import Gf2Matrix, mat_mul


def space_for_dim(d: int) -> OutcomeSpace:
    """Outcome space with n(n+1)/2 == d."""
    n = (math.isqrt(8 * d + 1) - 1) // 2
    if n * (n + 1) // 2 != d or n < 1:
        raise ShapeError(f"{d} is not a coevent-space dimension n(n+1)/2")
    return OutcomeSpace(n)


def idempotence_witness(m: Gf2Matrix) -> int | None:
    """A column index c with M(M e_c) != M e_c, or None if M is idempotent."""
    sq = mat_mul(m, m)
    for c in range(m.ncols):
        if sq.column(c) != m.column(c):
            return c
    return None


@dataclass(frozen=True)
class Projection:
    space: OutcomeSpace
    matrix: Gf2Matrix

    def __post_init__(self):
        d = self.space.dim
        if self.matrix.shape != (d, d):
            raise ShapeError(f"projection on D={d} needs a {d}x{d} matrix, got {self.matrix.shape}")
        c = idempotence_witness(self.matrix)
        if c is not None:
            raise NotIdempotentError(f"matrix is not idempotent (basis vector {c})", witness=c)

    @classmethod
    def identity(cls, space: OutcomeSpace) -> Projection:
        return cls(space, Gf2Matrix.identity(space.dim))

    @classmethod
    def zero(cls, space: OutcomeSpace) -> Projection:
        return cls(space, Gf2Matrix.zero(space.dim))

    def __matmul__(self, other):
        if isinstance(other, Projection):
            return mat_mul(self.matrix, other.matrix)
        if isinstance(other, Coevent):
            return Coevent.from_vector(self.space, self.matrix @ other.vector)
        return NotImplemented

    def apply(self, phi: Coevent) -> Coevent:
        return self @ phi

    @property
    def prime(self) -> Projection:
        return complement(self)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __str__(self) -> str:
        return str(self.matrix)


def make_projection(m: Gf2Matrix, space: OutcomeSpace | None = None) -> Projection:
    if not m.is_square():
        raise ShapeError(f"projection matrix must be square, got {m.shape}")
    if space is None:
        space = space_for_dim(m.nrows)
    return Projection(space, m)


def _product(p: Projection, q: Projection) -> Gf2Matrix:
    if p.space != q.space:
        raise ShapeError("projections on different spaces")
    return mat_mul(p.matrix, q.matrix)


def leq(p: Projection, q: Projection) -> bool:
    """P <= Q iff PQ = QP = P."""
    return _product(p, q) == p.matrix and _product(q, p) == p.matrix


def commute(p: Projection, q: Projection) -> bool:
    return _product(p, q) == _product(q, p)


def orthogonal(p: Projection, q: Projection) -> bool:
    """P is orthogonal to Q, defined as P <= Q'."""
    return leq(p, complement(q))


@dataclass(frozen=True)
class PosetRelationReport:
    commute: bool
    leq: bool
    geq: bool
    orthogonal: bool
    compatible: bool

    def to_dict(self) -> dict:
        return asdict(self)


def relations(p: Projection, q: Projection) -> PosetRelationReport:
    pq, qp = _product(p, q), _product(q, p)
    com = pq == qp
    return PosetRelationReport(
        commute=com,
        leq=com and pq == p.matrix,
        geq=com and pq == q.matrix,
        orthogonal=com and pq.is_zero(),
        compatible=com,
    )


def complement(p: Projection) -> Projection:
    return Projection(p.space, Gf2Matrix.identity(p.space.dim) + p.matrix)


def meet_join_commuting(p: Projection, q: Projection) -> tuple[Projection, Projection]:
    """For commuting P, Q: meet PQ and join P + Q + PQ."""
    pq = _product(p, q)
    if pq != _product(q, p):
        raise IncompatibleError("meet/join formula needs PQ = QP")
    meet = Projection(p.space, pq)
    join = Projection(p.space, p.matrix + q.matrix + pq)
    return meet, join


def compatibility_decomposition(p: Projection, q: Projection) -> tuple[Projection, Projection, Projection]:
    """(P1, Q1, R) = (P + PQ, Q + PQ, PQ), mutually orthogonal with P = P1 v R, Q = Q1 v R."""
    pq = _product(p, q)
    if pq != _product(q, p):
        raise IncompatibleError("projections do not commute, so they are not compatible")
    r = Projection(p.space, pq)
    return Projection(p.space, p.matrix + pq), Projection(p.space, q.matrix + pq), r


def generator_matrix(space: OutcomeSpace, i: int) -> Gf2Matrix:
    """Matrix of P(w_i) acting on the coefficient basis.

    w_i* -> w_i*, w_j* -> w_i*w_j*, w_i*w_j* -> w_i*w_j*, w_j*w_k* -> 0 (j, k != i).
    """
    n = space.n
    columns = []
    for mono in monomial_labels(n):
        if mono == (i,):
            columns.append(1 << coefficient_index(n, i))
        elif len(mono) == 1:
            columns.append(1 << coefficient_index(n, i, mono[0]))
        elif i in mono:
            columns.append(1 << coefficient_index(n, *mono))
        else:
            columns.append(0)
    return Gf2Matrix.from_columns(space.dim, columns)


@dataclass(frozen=True)
class RandomVariable:
    space: OutcomeSpace
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != self.space.n:
            raise ShapeError(f"need {self.space.n} values, got {len(self.values)}")

    def preimage(self, borel: Iterable[float]) -> Event:
        targets = set(borel)
        return Event.of(self.space, (i for i, v in enumerate(self.values, start=1) if v in targets))


@dataclass(frozen=True)
class MasterObservable:
    """A -> P(A) = sum over i in A of P(w_i) plus sum over i < j in A of P(w_i)P(w_j)."""

    space: OutcomeSpace
    _cache: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    @cached_property
    def generators(self) -> tuple[Projection, ...]:
        return tuple(Projection(self.space, generator_matrix(self.space, i)) for i in self.space.outcomes())

    def __call__(self, a: Event) -> Projection:
        return master_projection(self, a)


def master_projection(obs: MasterObservable, a: Event) -> Projection:
    if a.space != obs.space:
        raise ShapeError("event from a different outcome space")
    cached = obs._cache.get(a.mask)
    if cached is not None:
        return cached
    d = obs.space.dim
    total = Gf2Matrix.zero(d)
    gens = [obs.generators[i - 1].matrix for i in a.elements()]
    for k, g in enumerate(gens):
        total = total + g
        for h in gens[k + 1:]:
            total = total + mat_mul(g, h)
    proj = Projection(obs.space, total)
    obs._cache[a.mask] = proj
    return proj


def observable(obs: MasterObservable, f: RandomVariable, borel: Iterable[float]) -> Projection:
    """P^f(B) = P(f^{-1}(B))."""
    return master_projection(obs, f.preimage(borel))


def projection_from_rows(rows: Sequence[Sequence[int]], space: OutcomeSpace | None = None) -> Projection:
    return make_projection(Gf2Matrix.from_lists(rows), space)
