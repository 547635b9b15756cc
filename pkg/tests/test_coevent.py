from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from anhomlogic import coevent as co
from anhomlogic import truth as tf
from anhomlogic.coevent import Coevent
from anhomlogic.errors import ArgumentError, DisjointnessError, NotACoeventError
from anhomlogic.events import OutcomeSpace, square
from anhomlogic.textio import format_coevent

S3 = OutcomeSpace(3)
S4 = OutcomeSpace(4)
coevents4 = st.integers(0, (1 << 10) - 1).map(lambda c: Coevent(S4, c))


def evaluate_by_definition(phi, a):
    """Sum over monomials of the product of containment values."""
    return sum(all(i in a for i in mono) for mono in phi.monomials()) % 2


def test_coefficient_order():
    assert co.monomial_labels(3) == ((1,), (2,), (3,), (1, 2), (1, 3), (2, 3))
    assert co.coefficient_index(4, 3, 4) == 9
    assert co.coefficient_index(4, 2, 2) == 1
    with pytest.raises(ArgumentError):
        co.coefficient_index(3, 1, 4)


def test_from_monomials_cancels_and_folds_squares():
    phi = Coevent.from_monomials(S3, [(1,), (1, 2), (2, 1), (3, 3)])
    assert phi.monomials() == [(1,), (3,)]
    with pytest.raises(ArgumentError):
        Coevent.from_monomials(S3, [(1, 2, 3)])


@given(coevents4, st.integers(0, 15))
def test_evaluation_matches_definition(phi, mask):
    a = list(S4.events())[mask]
    assert phi(a) == evaluate_by_definition(phi, a) == co.evaluate(phi, a)


@given(coevents4, coevents4, st.integers(0, 15))
def test_addition_is_pointwise(phi, psi, mask):
    assert (phi + psi)(mask) == phi(mask) ^ psi(mask)


@given(coevents4)
def test_vanishes_on_empty(phi):
    assert phi(0) == 0


@given(coevents4)
def test_interpolate_round_trip(phi):
    singles, doubles = co.low_order_values(phi)
    assert co.interpolate(S4, singles, doubles) == phi


@given(coevents4)
def test_table_round_trip(phi):
    assert co.from_table(co.to_table(phi)) == phi


def test_interpolate_rejects_wrong_lengths():
    with pytest.raises(ArgumentError):
        co.interpolate(S3, [1, 0], [0, 0, 0])


def test_from_table_reports_witness():
    t = tf.TruthTable.from_events(S3, [S3.omega])
    with pytest.raises(NotACoeventError) as info:
        co.from_table(t)
    assert info.value.witness == S3.omega


def test_unital():
    assert Coevent.from_monomials(S3, [(3,), (1, 3), (2, 3)]).is_unital()
    assert not Coevent.from_monomials(S3, [(1,), (2,)]).is_unital()


@given(coevents4)
def test_partition_identity_on_every_family(phi):
    for m in (2, 3, 4):
        for parts in co.disjoint_families(S4, m):
            assert co.partition_identity_holds(phi, parts)


@given(coevents4)
def test_pair_identity_on_every_tuple(phi):
    for m in (2, 3, 4):
        for tup in combinations(range(1, 5), m):
            assert co.pair_identity_holds(phi, tup)


def test_partition_identity_fails_for_cubic_table():
    cubic = tf.TruthTable.from_events(S3, [S3.omega])
    assert not co.pair_identity_holds(cubic, (1, 2, 3))


def test_partition_identity_argument_checks():
    phi = Coevent.zero(S3)
    with pytest.raises(DisjointnessError):
        co.partition_identity_holds(phi, [S3.event(1, 2), S3.event(2)])
    with pytest.raises(ArgumentError):
        co.partition_identity_holds(phi, [S3.event(1)])
    with pytest.raises(ArgumentError):
        co.pair_identity_holds(phi, (1, 1))


def test_disjoint_family_counts():
    # unordered families of m disjoint nonempty subsets of a 4-set
    counts = {m: len(list(co.disjoint_families(S4, m))) for m in (1, 2, 3, 4)}
    assert counts == {1: 15, 2: 25, 3: 10, 4: 1}
    for fam in co.disjoint_families(S4, 3):
        masks = [a.mask for a in fam]
        assert all(m and not (x & y) for m in masks for x, y in combinations(masks, 2))


@given(coevents4)
def test_lift_agrees_on_squares(phi):
    lam = co.lift_to_product(phi)
    assert all(lam(square(a)) == phi(a) for a in S4.events())


def test_lift_table_is_grade1_additive():
    phi = Coevent.from_monomials(OutcomeSpace(2), [(1,), (1, 2)])
    assert tf.is_grade1_additive(co.lift_to_product(phi).to_table())


def test_psi_fixture():
    s5 = OutcomeSpace(5)
    ones = {(1, 2), (2, 3), (4, 5)}
    doubles = [1 if p in ones else 0 for p in combinations(range(1, 6), 2)]
    psi = co.interpolate(s5, [1, 1, 0, 0, 0], doubles)
    assert format_coevent(psi) == (
        "w1* + w2* + w1*w2* + w1*w3* + w1*w4* + w1*w5* + w2*w4* + w2*w5* + w4*w5*"
    )
    assert psi.quadratic[(2, 3)] == 0
    assert psi(s5.event(2, 3)) == 1


def test_enumerate_coevents_count():
    assert len(set(co.enumerate_coevents(S3))) == 64
