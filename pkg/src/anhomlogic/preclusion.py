"""Preclusive and precluding coevent subspaces for a family of precluded events."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product as iproduct
from typing import Iterable, Iterator

from .coevent import Coevent, enumerate_coevents, evaluation_row
from .errors import ArgumentError, CapacityError
from .events import Event, OutcomeSpace
from .gf2 import (
    Gf2Matrix,
    Gf2Vector,
    canonical_basis,
    column_space_basis,
    null_space_basis,
    span_rank,
)
from .projections import MasterObservable, complement, master_projection

MAX_DUALITY_N = 4


@dataclass(frozen=True)
class PrecludedFamily:
    """Precluded events; the empty event is always precluded and never stored."""

    space: OutcomeSpace
    members: tuple[Event, ...] = ()

    def __post_init__(self):
        seen: dict[int, Event] = {}
        for a in self.members:
            if a.space != self.space:
                raise ArgumentError("precluded event from a different outcome space")
            if a.mask:
                seen.setdefault(a.mask, a)
        object.__setattr__(self, "members", tuple(seen.values()))

    @classmethod
    def of(cls, space: OutcomeSpace, *events: Iterable[int]) -> PrecludedFamily:
        return cls(space, tuple(Event.of(space, e) for e in events))

    @property
    def union(self) -> Event:
        mask = 0
        for a in self.members:
            mask |= a.mask
        return Event(self.space, mask)

    def closed_under_disjoint_unions(self) -> PrecludedFamily:
        """Add unions of pairwise disjoint members until nothing new appears."""
        masks = {a.mask for a in self.members}
        grew = True
        while grew:
            grew = False
            for a in list(masks):
                for b in list(masks):
                    if a & b == 0 and (a | b) not in masks:
                        masks.add(a | b)
                        grew = True
        return PrecludedFamily(self.space, tuple(Event(self.space, m) for m in sorted(masks)))

    def __str__(self) -> str:
        return ";".join(str(a) for a in self.members) if self.members else "{}"


@dataclass(frozen=True)
class CoeventSubspace:
    """Span of ``basis``; bases are kept in the canonical null-space form."""

    space: OutcomeSpace
    basis: tuple[Coevent, ...]

    @classmethod
    def spanned_by(cls, space: OutcomeSpace, coevents: Iterable[Coevent]) -> CoeventSubspace:
        vecs = canonical_basis((c.vector for c in coevents), space.dim)
        return cls(space, tuple(Coevent.from_vector(space, v) for v in vecs))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _vectors(self) -> list[Gf2Vector]:
        return [c.vector for c in self.basis]

    def __contains__(self, phi: Coevent) -> bool:
        return span_rank([*self._vectors(), phi.vector], self.space.dim) == self.dim

    def issubspace(self, other: CoeventSubspace) -> bool:
        return span_rank([*self._vectors(), *other._vectors()], self.space.dim) == other.dim

    def span_equals(self, other: CoeventSubspace) -> bool:
        return self.dim == other.dim and self.issubspace(other)

    def elements(self) -> Iterator[Coevent]:
        for picks in iproduct((0, 1), repeat=self.dim):
            acc = 0
            for pick, c in zip(picks, self.basis):
                if pick:
                    acc ^= c.coeffs
            yield Coevent(self.space, acc)


def evaluation_matrix(space: OutcomeSpace, events: Iterable[Event]) -> Gf2Matrix:
    """Row per event: the coefficients that phi(A) sums."""
    rows = tuple(evaluation_row(space.n, a.mask) for a in events)
    return Gf2Matrix(len(rows), space.dim, rows)


def _from_vectors(space: OutcomeSpace, vectors: list[Gf2Vector]) -> CoeventSubspace:
    return CoeventSubspace(space, tuple(Coevent.from_vector(space, v) for v in vectors))


def preclusive_basis(fam: PrecludedFamily) -> CoeventSubspace:
    """Coevents vanishing on every precluded event."""
    m = evaluation_matrix(fam.space, fam.members)
    return _from_vectors(fam.space, null_space_basis(m))


def precluding_basis(fam: PrecludedFamily, obs: MasterObservable | None = None) -> CoeventSubspace:
    """Null space of P(A1 u ... u Am)."""
    obs = obs or MasterObservable(fam.space)
    return _from_vectors(fam.space, null_space_basis(master_projection(obs, fam.union).matrix))


def precluding_basis_via_range(fam: PrecludedFamily, obs: MasterObservable | None = None) -> CoeventSubspace:
    """Range of P(A1)' ... P(Am)', brought to canonical form."""
    obs = obs or MasterObservable(fam.space)
    prod = Gf2Matrix.identity(fam.space.dim)
    for a in fam.members:
        prod = prod @ complement(master_projection(obs, a)).matrix
    vecs = canonical_basis(column_space_basis(prod), fam.space.dim)
    return _from_vectors(fam.space, vecs)


@dataclass(frozen=True)
class Occurrence:
    exists: bool
    witness: Coevent | None = None


def occurrence_query(fam: PrecludedFamily, b: Event, mode: str = "preclusive") -> Occurrence:
    """Is there a preclusive (or precluding) coevent with phi(B) = 1?

    Evaluation at B is linear, so it suffices to scan the basis.
    """
    if mode == "preclusive":
        sub = preclusive_basis(fam)
    elif mode == "precluding":
        sub = precluding_basis(fam)
    else:
        raise ArgumentError(f"mode must be 'preclusive' or 'precluding', got {mode!r}")
    for phi in sub.basis:
        if phi(b):
            return Occurrence(True, phi)
    return Occurrence(False, None)


@dataclass
class DualityReport:
    family: PrecludedFamily
    preclusive_dim: int
    precluding_dim: int
    passed: bool = True
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    # B with a preclusive witness although B lies inside the union
    preclusive_inside_union: list[Event] = field(default_factory=list)
    # B outside the union that no precluding coevent reaches
    precluding_unreachable: list[Event] = field(default_factory=list)
    containment_witnesses: dict[str, int] = field(default_factory=dict)

    def tally(self, check: str, ok: bool, detail: str = "") -> None:
        self.checks[check] = self.checks.get(check, 0) + 1
        if not ok:
            self.passed = False
            self.failures.append(f"{check}: {detail}")

    def to_dict(self) -> dict:
        return {
            "family": str(self.family),
            "preclusive_dim": self.preclusive_dim,
            "precluding_dim": self.precluding_dim,
            "passed": self.passed,
            "checks": dict(self.checks),
            "failures": list(self.failures),
            "preclusive_inside_union": [str(b) for b in self.preclusive_inside_union],
            "precluding_unreachable": [str(b) for b in self.precluding_unreachable],
            "containment_witnesses": dict(self.containment_witnesses),
        }


def duality_report(fam: PrecludedFamily, obs: MasterObservable | None = None) -> DualityReport:
    """Check containment and the two one-way occurrence implications over every event B."""
    space = fam.space
    if space.n > MAX_DUALITY_N:
        raise CapacityError(f"duality report scans all events; needs n <= {MAX_DUALITY_N}")
    obs = obs or MasterObservable(space)
    pcv = preclusive_basis(fam)
    pcg = precluding_basis(fam, obs)
    rep = DualityReport(fam, pcv.dim, pcg.dim)
    union = fam.union
    outside = union.complement()

    rep.tally("precluding_subset_of_preclusive", pcg.issubspace(pcv), f"dims {pcg.dim} vs {pcv.dim}")
    rep.tally(
        "range_matches_null_space",
        pcg.span_equals(precluding_basis_via_range(fam, obs)),
        "the two precluding characterisations disagree",
    )
    for phi in pcg.basis:
        for a in fam.members:
            rep.tally("precluding_basis_is_preclusive", phi(a) == 0, f"{phi} on {a}")

    for b in space.events():
        b_out = b & outside
        by_pcv = next((phi for phi in pcv.basis if phi(b)), None)
        by_pcg = next((phi for phi in pcg.basis if phi(b)), None)
        if b_out:
            w = b_out.elements()[0]
            star = Coevent.from_monomials(space, [(w,)])
            ok = star(b) == 1 and all(star(a) == 0 for a in fam.members)
            rep.tally("outside_point_is_preclusive_witness", ok, f"w{w}* for B={b}")
            rep.containment_witnesses[str(b)] = w
            rep.tally("outside_implies_preclusive_witness", by_pcv is not None, f"B={b}")
        elif by_pcv is not None:
            rep.preclusive_inside_union.append(b)
        if by_pcg is not None:
            rep.tally("precluding_witness_implies_outside", bool(b_out), f"B={b}")
        elif b_out:
            rep.precluding_unreachable.append(b)
        # corollary form of the same two implications
        if by_pcv is None:
            rep.tally("all_preclusive_vanish_implies_inside", b.issubset(union), f"B={b}")
        if b.issubset(union):
            rep.tally("inside_implies_all_precluding_vanish", by_pcg is None, f"B={b}")
    return rep


def annihilation_implies_vanishing(space: OutcomeSpace, obs: MasterObservable | None = None) -> list[tuple[Event, Coevent]]:
    """Counterexamples to: P(A) phi = 0 implies phi(A) = 0, over every A and every coevent."""
    obs = obs or MasterObservable(space)
    bad = []
    for a in space.events():
        p = master_projection(obs, a)
        for phi in enumerate_coevents(space):
            if (p @ phi).is_zero() and phi(a):
                bad.append((a, phi))
    return bad


def families(space: OutcomeSpace, max_members: int) -> Iterator[PrecludedFamily]:
    """Every family of at most ``max_members`` distinct nonempty events."""
    nonempty = [Event(space, m) for m in range(1, space.num_events)]
    for k in range(max_members + 1):
        for combo in combinations(nonempty, k):
            yield PrecludedFamily(space, combo)
