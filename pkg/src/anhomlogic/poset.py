"""The poset of all projections on GF(2)^D: order, meets, joins, orthomodularity.

An idempotent is determined by its image U and kernel K, which are
complementary subspaces, and R <= P holds iff U_R is inside U_P and K_R
contains K_P.  Each subspace is stored as a membership mask over all 2^D
vectors (bit v set iff v is in the subspace), so for D <= 6 the whole order
reduces to vectorised uint64 bit tests.  The complement I + P swaps U and K.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .errors import CapacityError, ShapeError
from .gf2 import Gf2Matrix, iter_bits, mat_mul
from .projections import Projection, idempotence_witness, make_projection

MAX_EXHAUSTIVE_DIM = 4
MAX_UNIVERSE_DIM = 6
BOUNDS_CACHE_SIZE = 128  # order masks kept per universe (about 1 MB each at D=6)


def _apply_columns(columns: list[int], v: int) -> int:
    out = 0
    for c in iter_bits(v):
        out ^= columns[c]
    return out


def image_kernel_masks(m: Gf2Matrix) -> tuple[int, int]:
    d = m.ncols
    if d > MAX_UNIVERSE_DIM:
        raise CapacityError(f"subspace masks need D <= {MAX_UNIVERSE_DIM}")
    cols = m.columns()
    image = kernel = 0
    for v in range(1 << d):
        w = _apply_columns(cols, v)
        image |= 1 << w
        if w == 0:
            kernel |= 1 << v
    return image, kernel


def span_mask(vectors) -> int:
    members = 1
    for v in vectors:
        if (members >> v) & 1:
            continue
        shifted = 0
        for u in iter_bits(members):
            shifted |= 1 << (u ^ v)
        members |= shifted
    return members


def enumerate_subspaces(d: int) -> list[int]:
    """Membership masks of all subspaces of GF(2)^d, via reduced echelon bases."""
    found = []
    for k in range(d + 1):
        for pivots in combinations(range(d), k):
            free_slots = []
            for r, p in enumerate(pivots):
                free_slots.append([c for c in range(p + 1, d) if c not in pivots])
            n_free = sum(len(s) for s in free_slots)
            for fill in range(1 << n_free):
                basis = []
                pos = 0
                for p, slots in zip(pivots, free_slots):
                    v = 1 << p
                    for c in slots:
                        if (fill >> pos) & 1:
                            v |= 1 << c
                        pos += 1
                    basis.append(v)
                found.append(span_mask(basis))
    return found


def projection_matrix(d: int, image: int, kernel: int) -> Gf2Matrix:
    """Matrix of the projection onto ``image`` along ``kernel``."""
    columns = []
    for c in range(d):
        e = 1 << c
        col = next((u for u in iter_bits(image) if (kernel >> (e ^ u)) & 1), None)
        if col is None:
            raise ShapeError("image and kernel are not complementary")
        columns.append(col)
    return Gf2Matrix.from_columns(d, columns)


class ProjectionUniverse:
    """Every projection on GF(2)^D, indexed 0..N-1."""

    def __init__(self, dim: int, images, kernels, source: str):
        self.dim = dim
        self.images = np.asarray(images, dtype=np.uint64)
        self.kernels = np.asarray(kernels, dtype=np.uint64)
        self.source = source
        self._index = {(int(u), int(k)): i for i, (u, k) in enumerate(zip(images, kernels))}
        self._matrices: dict[int, Gf2Matrix] = {}
        self._bounds: dict[tuple[str, int], np.ndarray] = {}

    @classmethod
    def exhaustive(cls, dim: int) -> ProjectionUniverse:
        """Brute force: test all 2^(D^2) matrices for idempotence."""
        if dim > MAX_EXHAUSTIVE_DIM:
            raise CapacityError(f"exhaustive matrix enumeration needs D <= {MAX_EXHAUSTIVE_DIM}")
        images, kernels, mats = [], [], []
        full = (1 << dim) - 1
        for rows in product(range(full + 1), repeat=dim):
            m = Gf2Matrix(dim, dim, rows)
            if idempotence_witness(m) is None:
                u, k = image_kernel_masks(m)
                images.append(u)
                kernels.append(k)
                mats.append(m)
        uni = cls(dim, images, kernels, "matrix enumeration")
        uni._matrices = dict(enumerate(mats))
        return uni

    @classmethod
    def from_subspaces(cls, dim: int) -> ProjectionUniverse:
        """Pair every subspace with each of its complements."""
        if dim > MAX_UNIVERSE_DIM:
            raise CapacityError(f"projection universe limited to D <= {MAX_UNIVERSE_DIM}")
        subs = enumerate_subspaces(dim)
        by_dim: dict[int, list[int]] = {}
        for s in subs:
            by_dim.setdefault(s.bit_count().bit_length() - 1, []).append(s)
        arrays = {k: np.array(v, dtype=np.uint64) for k, v in by_dim.items()}
        images, kernels = [], []
        for k, us in by_dim.items():
            ks = arrays[dim - k]
            for u in us:
                hits = ks[(ks & np.uint64(u)) == np.uint64(1)]
                images.append(np.full(len(hits), u, dtype=np.uint64))
                kernels.append(hits)
        return cls(dim, np.concatenate(images), np.concatenate(kernels), "subspace pairs")

    def __len__(self) -> int:
        return len(self.images)

    def index_of(self, m: Gf2Matrix) -> int:
        return self._index[image_kernel_masks(m)]

    def matrix(self, i: int) -> Gf2Matrix:
        m = self._matrices.get(i)
        if m is None:
            m = projection_matrix(self.dim, int(self.images[i]), int(self.kernels[i]))
            self._matrices[i] = m
        return m

    def complement_index(self, i: int) -> int:
        return self._index[(int(self.kernels[i]), int(self.images[i]))]

    def leq(self, i: int, j: int) -> bool:
        ui, ki, uj, kj = (int(x) for x in (self.images[i], self.kernels[i], self.images[j], self.kernels[j]))
        return ui & ~uj == 0 and kj & ~ki == 0

    def _cached(self, key: tuple[str, int], compute) -> np.ndarray:
        hit = self._bounds.get(key)
        if hit is None:
            if len(self._bounds) >= BOUNDS_CACHE_SIZE:
                self._bounds.pop(next(iter(self._bounds)))
            hit = self._bounds[key] = compute()
        return hit

    def down(self, i: int) -> np.ndarray:
        """Boolean mask of R with R <= P_i."""
        u, k = self.images[i], self.kernels[i]
        return self._cached(("down", i), lambda: ((self.images & ~u) == 0) & ((k & ~self.kernels) == 0))

    def up(self, i: int) -> np.ndarray:
        u, k = self.images[i], self.kernels[i]
        return self._cached(("up", i), lambda: ((u & ~self.images) == 0) & ((self.kernels & ~k) == 0))

    def _greatest(self, members: np.ndarray) -> int | None:
        if not members.any():
            return None
        uor = np.bitwise_or.reduce(self.images[members])
        kand = np.bitwise_and.reduce(self.kernels[members])
        top = members & ((uor & ~self.images) == 0) & ((self.kernels & ~kand) == 0)
        hits = np.flatnonzero(top)
        return int(hits[0]) if len(hits) else None

    def _least(self, members: np.ndarray) -> int | None:
        if not members.any():
            return None
        uand = np.bitwise_and.reduce(self.images[members])
        kor = np.bitwise_or.reduce(self.kernels[members])
        bottom = members & ((self.images & ~uand) == 0) & ((kor & ~self.kernels) == 0)
        hits = np.flatnonzero(bottom)
        return int(hits[0]) if len(hits) else None

    def lower_bounds(self, i: int, j: int) -> np.ndarray:
        return self.down(i) & self.down(j)

    def upper_bounds(self, i: int, j: int) -> np.ndarray:
        return self.up(i) & self.up(j)

    def glb(self, i: int, j: int) -> int | None:
        return self._greatest(self.lower_bounds(i, j))

    def lub(self, i: int, j: int) -> int | None:
        return self._least(self.upper_bounds(i, j))

    def leq_table(self) -> np.ndarray:
        """table[a, b] = P_a <= P_b; only sensible for small universes."""
        u, k = self.images, self.kernels
        return ((u[:, None] & ~u[None, :]) == 0) & ((k[None, :] & ~k[:, None]) == 0)

    def rank_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for u in self.images:
            r = int(u).bit_count().bit_length() - 1
            counts[r] = counts.get(r, 0) + 1
        return dict(sorted(counts.items()))


@lru_cache(maxsize=None)
def universe_for_dim(dim: int) -> ProjectionUniverse:
    if dim <= 3:
        return ProjectionUniverse.exhaustive(dim)
    return ProjectionUniverse.from_subspaces(dim)


def all_projections(dim: int) -> list[Projection]:
    """Every D x D idempotent, by brute force over 2^(D^2) matrices."""
    uni = universe_for_dim(dim) if dim <= 3 else ProjectionUniverse.exhaustive(dim)
    return [make_projection(uni.matrix(i)) for i in range(len(uni))]


def _leq_matrix(p: Gf2Matrix, q: Gf2Matrix) -> bool:
    return mat_mul(p, q) == p and mat_mul(q, p) == p


@dataclass
class OrthomodularReport:
    passed: bool
    universe: str
    universe_size: int
    projections: int
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "universe": self.universe,
            "universe_size": self.universe_size,
            "projections": self.projections,
            "checks": dict(self.checks),
            "failures": list(self.failures),
        }


def verify_orthomodular(
    projs: list[Projection],
    universe: ProjectionUniverse | None = None,
    max_failures: int = 20,
) -> OrthomodularReport:
    """Check the orthocomplemented-poset and orthomodular axioms over all pairs of ``projs``.

    Order tests use matrix products.  Meets and joins are searched in the
    universe of all projections of the same dimension.
    """
    if not projs:
        return OrthomodularReport(True, "none", 0, 0)
    d = projs[0].space.dim
    if universe is None:
        universe = universe_for_dim(d)
    ident = Gf2Matrix.identity(d)
    mats = [p.matrix for p in projs]
    idx = [universe.index_of(m) for m in mats]
    n = len(mats)
    leq = [[_leq_matrix(a, b) for b in mats] for a in mats]
    report = OrthomodularReport(True, universe.source, len(universe), n)

    def tally(check: str, ok: bool, **witness):
        report.checks[check] = report.checks.get(check, 0) + 1
        if not ok:
            report.passed = False
            if len(report.failures) < max_failures:
                report.failures.append({"check": check, **{k: str(v) for k, v in witness.items()}})

    zero_idx = universe.index_of(Gf2Matrix.zero(d))
    for a in range(n):
        p = mats[a]
        pc = ident + p
        tally("reflexive", leq[a][a], P=p)
        tally("involution", ident + pc == p, P=p)
        tally("order_matches_universe", universe.index_of(pc) == universe.complement_index(idx[a]), P=p)
        meet = universe.glb(idx[a], universe.complement_index(idx[a]))
        tally("complement_meet_zero", meet == zero_idx, P=p)

    for a in range(n):
        for b in range(n):
            p, q = mats[a], mats[b]
            pc, qc = ident + p, ident + q
            pq, qp = mat_mul(p, q), mat_mul(q, p)
            i, j = idx[a], idx[b]
            tally("order_matches_universe", leq[a][b] == universe.leq(i, j), P=p, Q=q)
            if leq[a][b] and leq[b][a]:
                tally("antisymmetric", p == q, P=p, Q=q)
            if leq[a][b]:
                tally("order_reversing", _leq_matrix(qc, pc), P=p, Q=q)
                # orthomodular law: Q = P v (Q ^ P')
                qp_meet = universe.glb(j, universe.complement_index(i))
                ok = qp_meet is not None and universe.lub(i, qp_meet) == j
                tally("orthomodular_law", ok, P=p, Q=q)
            orth = _leq_matrix(p, qc)
            tally("orthogonal_iff_products_zero", orth == (pq.is_zero() and qp.is_zero()), P=p, Q=q)
            if orth:
                join = universe.lub(i, j)
                ok = join is not None and universe.matrix(join) == p + q
                tally("orthogonal_join", ok, P=p, Q=q)
            if pq == qp:
                meet, join = universe.glb(i, j), universe.lub(i, j)
                ok = (
                    meet is not None
                    and join is not None
                    and universe.matrix(meet) == pq
                    and universe.matrix(join) == p + q + pq
                )
                tally("commuting_meet_join", ok, P=p, Q=q)

    for a in range(n):
        for b in range(n):
            if not leq[a][b]:
                continue
            for c in range(n):
                if leq[b][c]:
                    tally("transitive", leq[a][c], P=mats[a], Q=mats[b], R=mats[c])
    return report


def compatibility_by_search(universe: ProjectionUniverse) -> np.ndarray:
    """compat[i, j]: exist mutually orthogonal P1, Q1, R with P_i = P1 v R and P_j = Q1 v R.

    Pure search over the universe using its order; meant for small D.
    """
    size = len(universe)
    leq = universe.leq_table()
    comp = np.array([universe.complement_index(i) for i in range(size)])
    orth = leq[:, comp]  # orth[a, b]: P_a <= P_b'
    lub = np.full((size, size), -1, dtype=np.int64)
    for a in range(size):
        for b in range(a, size):
            j = universe.lub(a, b)
            lub[a, b] = lub[b, a] = -1 if j is None else j
    compat = np.zeros((size, size), dtype=bool)
    for i in range(size):
        for j in range(i, size):
            found = False
            for r in np.flatnonzero(leq[:, i] & leq[:, j]):
                p1s = np.flatnonzero(orth[:, r] & (lub[:, r] == i))
                q1s = np.flatnonzero(orth[:, r] & (lub[:, r] == j))
                if len(p1s) and len(q1s) and orth[np.ix_(p1s, q1s)].any():
                    found = True
                    break
            compat[i, j] = compat[j, i] = found
    return compat


@dataclass
class LatticeReport:
    mode: str
    dim: int
    seed: int | None
    universe_size: int
    examined: int = 0
    with_meet: int = 0
    without_meet: int = 0
    consistent: bool = True
    sampled_verifications: int = 0
    counterexamples: list[tuple[Gf2Matrix, Gf2Matrix]] = field(default_factory=list)
    inconsistencies: list[str] = field(default_factory=list)

    @property
    def label(self) -> str:
        return f"verified at D={self.dim}"

    @property
    def verdict(self) -> str:
        if self.examined == 0:
            return "no pairs examined"
        if self.without_meet:
            return f"{self.without_meet} of {self.examined} examined pairs have no meet ({self.label})"
        return f"all {self.examined} examined pairs have meets ({self.label})"

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "dim": self.dim,
            "seed": self.seed,
            "universe_size": self.universe_size,
            "examined": self.examined,
            "with_meet": self.with_meet,
            "without_meet": self.without_meet,
            "consistent": self.consistent,
            "sampled_verifications": self.sampled_verifications,
            "verdict": self.verdict,
            "counterexamples": [
                {"P": p.to_lists(), "Q": q.to_lists()} for p, q in self.counterexamples
            ],
            "inconsistencies": list(self.inconsistencies),
        }


def lattice_search(
    space,
    mode: str = "exhaustive",
    budget: int | None = None,
    seed: int = 0,
    keep: int = 10,
    verify_limit: int = 4096,
) -> LatticeReport:
    """Look for projection pairs without a greatest lower bound.

    Evidence only: the verdict covers the pairs examined at this dimension.
    Every meet found is re-verified by matrix products against the full set
    of common lower bounds; when a pair has more than ``verify_limit`` lower
    bounds a seeded sample of that size is checked instead and counted in
    ``sampled_verifications``.
    """
    d = space.dim
    if mode == "exhaustive":
        if d > MAX_EXHAUSTIVE_DIM:
            raise CapacityError(f"exhaustive lattice search needs D <= {MAX_EXHAUSTIVE_DIM}, got D={d}")
        universe = universe_for_dim(d) if d <= 3 else ProjectionUniverse.exhaustive(d)
        size = len(universe)
        pairs = [(i, j) for i in range(size) for j in range(i, size)]
        if budget is not None:
            pairs = pairs[:budget]
        report = LatticeReport(mode, d, None, size)
    elif mode == "random":
        if d > MAX_UNIVERSE_DIM:
            raise CapacityError(f"random lattice search needs D <= {MAX_UNIVERSE_DIM}, got D={d}")
        universe = universe_for_dim(d)
        size = len(universe)
        rng = random.Random(seed)
        pairs = [(rng.randrange(size), rng.randrange(size)) for _ in range(budget or 0)]
        report = LatticeReport(mode, d, seed, size)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    for i, j in pairs:
        report.examined += 1
        lower = np.flatnonzero(universe.lower_bounds(i, j))
        meet = universe.glb(i, j)
        p, q = universe.matrix(i), universe.matrix(j)
        if meet is None:
            report.without_meet += 1
            if len(report.counterexamples) < keep:
                report.counterexamples.append((p, q))
            continue
        report.with_meet += 1
        g = universe.matrix(meet)
        ok = _leq_matrix(g, p) and _leq_matrix(g, q)
        if len(lower) > verify_limit:
            report.sampled_verifications += 1
            lower = random.Random(seed ^ (i * size + j)).sample(list(lower), verify_limit)
        ok = ok and all(_leq_matrix(universe.matrix(int(r)), g) for r in lower)
        pq = mat_mul(p, q)
        if pq == mat_mul(q, p):
            ok = ok and g == pq
        if not ok:
            report.consistent = False
            report.inconsistencies.append(f"meet of pair ({i},{j}) failed re-verification")
    return report
