from math import prod

import numpy as np
import pytest

from anhomlogic import poset
from anhomlogic import projections as pj
from anhomlogic.errors import CapacityError
from anhomlogic.events import OutcomeSpace
from anhomlogic.gf2 import Gf2Matrix


def gaussian_binomial(n, k):
    num = prod((1 << (n - i)) - 1 for i in range(k))
    den = prod((1 << (i + 1)) - 1 for i in range(k))
    return num // den


def idempotent_count(d):
    # pick an image of dimension k, then a complementary kernel
    return sum(gaussian_binomial(d, k) * 2 ** (k * (d - k)) for k in range(d + 1))


def test_subspace_counts():
    assert len(poset.enumerate_subspaces(3)) == 16
    assert len(poset.enumerate_subspaces(4)) == sum(gaussian_binomial(4, k) for k in range(5))


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_matrix_and_subspace_universes_agree(d):
    a = poset.ProjectionUniverse.exhaustive(d)
    b = poset.ProjectionUniverse.from_subspaces(d)
    assert len(a) == len(b) == idempotent_count(d)
    assert sorted(zip(a.images.tolist(), a.kernels.tolist())) == sorted(zip(b.images.tolist(), b.kernels.tolist()))


def test_d6_universe_size():
    assert len(poset.universe_for_dim(6)) == idempotent_count(6) == 1051586


def test_universe_capacity():
    with pytest.raises(CapacityError):
        poset.ProjectionUniverse.exhaustive(5)
    with pytest.raises(CapacityError):
        poset.ProjectionUniverse.from_subspaces(7)


def test_matrix_round_trip_and_complement():
    u = poset.universe_for_dim(3)
    for i in range(len(u)):
        m = u.matrix(i)
        assert u.index_of(m) == i
        assert u.matrix(u.complement_index(i)) == Gf2Matrix.identity(3) + m


def test_universe_order_matches_products():
    u = poset.universe_for_dim(3)
    leq = u.leq_table()
    for i in range(len(u)):
        for j in range(len(u)):
            p, q = u.matrix(i), u.matrix(j)
            assert leq[i, j] == ((p @ q) == p and (q @ p) == p) == u.leq(i, j)


def test_all_58_pass_orthomodular_checks():
    projs = poset.all_projections(3)
    assert len(projs) == 58
    rep = poset.verify_orthomodular(projs)
    assert rep.passed, rep.failures
    assert rep.checks["orthomodular_law"] > 0


def test_hand_checked_pair_without_meet():
    p = pj.projection_from_rows([[0, 0, 0], [0, 1, 0], [0, 0, 1]])
    q = pj.MasterObservable(OutcomeSpace(2))(OutcomeSpace(2).singleton(2))
    u = poset.universe_for_dim(3)
    i, j = u.index_of(p.matrix), u.index_of(q.matrix)
    assert u.glb(i, j) is None
    lower = np.flatnonzero(u.lower_bounds(i, j))
    ranks = sorted(int(u.images[k]).bit_count().bit_length() - 1 for k in lower)
    assert ranks == [0, 1, 1]


def test_commuting_pairs_meet_is_product():
    projs = poset.all_projections(3)
    u = poset.universe_for_dim(3)
    for p in projs:
        for q in projs:
            if pj.commute(p, q):
                assert u.matrix(u.glb(u.index_of(p.matrix), u.index_of(q.matrix))) == p.matrix @ q.matrix


def test_lattice_search_exhaustive_d3_is_deterministic():
    a = poset.lattice_search(OutcomeSpace(2), "exhaustive")
    b = poset.lattice_search(OutcomeSpace(2), "exhaustive")
    assert a.to_dict() == b.to_dict()
    assert a.consistent and a.examined == 58 * 59 // 2
    assert a.with_meet + a.without_meet == a.examined
    assert a.label == "verified at D=3"


def test_lattice_search_random_is_seeded():
    a = poset.lattice_search(OutcomeSpace(3), "random", budget=20, seed=7)
    b = poset.lattice_search(OutcomeSpace(3), "random", budget=20, seed=7)
    assert a.to_dict() == b.to_dict() and a.consistent
    assert a.examined == 20


def test_lattice_search_limits():
    with pytest.raises(CapacityError):
        poset.lattice_search(OutcomeSpace(3), "exhaustive")
    with pytest.raises(ValueError):
        poset.lattice_search(OutcomeSpace(2), "greedy")


def test_compatibility_search_small():
    u = poset.universe_for_dim(3)
    compat = poset.compatibility_by_search(u)
    for i in range(len(u)):
        for j in range(len(u)):
            p, q = u.matrix(i), u.matrix(j)
            assert compat[i, j] == ((p @ q) == (q @ p))


def test_small_families_pass():
    s2 = OutcomeSpace(2)
    obs = pj.MasterObservable(s2)
    assert poset.verify_orthomodular([pj.Projection.zero(s2), pj.Projection.identity(s2)]).passed
    p1, p2 = obs(s2.singleton(1)), obs(s2.singleton(2))
    prod = pj.Projection(s2, p1 @ p2)
    family = [p1, p2, prod, pj.Projection.zero(s2), pj.Projection.identity(s2)]
    assert poset.verify_orthomodular(family).passed
    assert poset.verify_orthomodular([]).passed


def test_random_zero_budget_is_empty():
    rep = poset.lattice_search(OutcomeSpace(2), "random", budget=0, seed=1)
    assert rep.examined == 0 and rep.verdict == "no pairs examined"
