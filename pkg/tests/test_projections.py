import pytest
from hypothesis import given, strategies as st

from anhomlogic import projections as pj
from anhomlogic.coevent import Coevent
from anhomlogic.errors import IncompatibleError, NotIdempotentError, ShapeError
from anhomlogic.events import Event, OutcomeSpace
from anhomlogic.gf2 import Gf2Matrix

S2 = OutcomeSpace(2)
S3 = OutcomeSpace(3)
OBS3 = pj.MasterObservable(S3)
events3 = st.integers(0, 7).map(lambda m: Event(S3, m))


def test_space_for_dim():
    assert pj.space_for_dim(6).n == 3
    with pytest.raises(ShapeError):
        pj.space_for_dim(4)


def test_non_idempotent_rejected_with_witness():
    with pytest.raises(NotIdempotentError) as info:
        pj.projection_from_rows([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    assert info.value.witness == 1


def test_shape_checks():
    with pytest.raises(ShapeError):
        pj.make_projection(Gf2Matrix.zero(2, 3))
    with pytest.raises(ShapeError):
        pj.Projection(S3, Gf2Matrix.identity(3))


def test_generator_action_on_monomials():
    p1 = OBS3.generators[0]
    apply = lambda monos: (p1 @ Coevent.from_monomials(S3, monos)).monomials()
    assert apply([(1,)]) == [(1,)]
    assert apply([(2,)]) == [(1, 2)]
    assert apply([(1, 3)]) == [(1, 3)]
    assert apply([(2, 3)]) == []


def test_two_outcome_matrices():
    obs = pj.MasterObservable(S2)
    assert obs(S2.singleton(1)).matrix.to_lists() == [[1, 0, 0], [0, 0, 0], [0, 1, 1]]
    assert obs(S2.singleton(2)).matrix.to_lists() == [[0, 0, 0], [0, 1, 0], [1, 0, 1]]
    assert obs(S2.omega).matrix == Gf2Matrix.identity(3)


def test_relations_and_incompatibility():
    obs = pj.MasterObservable(S2)
    q = pj.projection_from_rows([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    p2 = obs(S2.singleton(2))
    rel = pj.relations(q, p2)
    assert not rel.commute and not rel.compatible and not rel.orthogonal
    assert (q @ p2).is_zero() and not (p2 @ q).is_zero()
    with pytest.raises(IncompatibleError):
        pj.compatibility_decomposition(q, p2)
    with pytest.raises(IncompatibleError):
        pj.meet_join_commuting(q, p2)


def test_orthogonal_means_below_complement():
    p1 = OBS3(S3.singleton(1))
    p23 = OBS3(S3.event(2, 3))
    assert not pj.orthogonal(p1, p23)  # P(w1)P(w2) != 0
    assert pj.orthogonal(p1, p1.prime)


@given(events3, events3)
def test_master_union_and_order(a, b):
    pa, pb = OBS3(a), OBS3(b)
    pab = pa @ pb
    assert pab == pb @ pa
    assert OBS3(a | b).matrix == pa.matrix + pb.matrix + pab
    assert pj.leq(pa, pb) == a.issubset(b)


@given(events3)
def test_annihilated_coevents_vanish(a):
    p = OBS3(a)
    for c in range(64):
        phi = Coevent(S3, c)
        if (p @ phi).is_zero():
            assert phi(a) == 0


def test_decomposition_of_commuting_pair():
    p, q = OBS3(S3.event(1, 2)), OBS3(S3.event(2, 3))
    p1, q1, r = pj.compatibility_decomposition(p, q)
    assert pj.orthogonal(p1, q1) and pj.orthogonal(p1, r) and pj.orthogonal(q1, r)
    assert pj.meet_join_commuting(p1, r)[1] == p
    assert pj.meet_join_commuting(q1, r)[1] == q


def test_observable_preimage():
    f = pj.RandomVariable(S3, (1.0, 1.0, 2.0))
    assert f.preimage({1.0}) == S3.event(1, 2)
    assert pj.observable(OBS3, f, {2.0}) == OBS3(S3.singleton(3))
    with pytest.raises(ShapeError):
        pj.RandomVariable(S3, (1.0,))


def test_constant_random_variable():
    f = pj.RandomVariable(S3, (5.0, 5.0, 5.0))
    assert pj.observable(OBS3, f, {5.0}).matrix == Gf2Matrix.identity(6)
    assert pj.observable(OBS3, f, {4.0}).is_zero()
