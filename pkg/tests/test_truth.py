from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from anhomlogic import truth as tf
from anhomlogic.errors import ArgumentError, CapacityError, DegenerateError, NotAdditiveError, NotMultiplicativeError
from anhomlogic.events import OutcomeSpace
from anhomlogic.truth import TruthTable

S3 = OutcomeSpace(3)
tables3 = st.integers(0, (1 << 7) - 1).map(lambda k: TruthTable(S3, k << 1))


def brute_grade1(t):
    n = t.space.num_events
    return all(t(a | b) == t(a) ^ t(b) for a in range(n) for b in range(n) if not a & b)


def brute_grade2(t):
    n = t.space.num_events
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if a & b or a & c or b & c:
                    continue
                rhs = t(a | b) ^ t(a | c) ^ t(b | c) ^ t(a) ^ t(b) ^ t(c)
                if t(a | b | c) != rhs:
                    return False
    return True


def test_empty_event_must_be_zero():
    with pytest.raises(ArgumentError):
        TruthTable(S3, 1)


def test_containment_map():
    t = TruthTable.containment(S3, 2)
    assert [t(a) for a in S3.events()] == [1 if 2 in a else 0 for a in S3.events()]
    with pytest.raises(ArgumentError):
        TruthTable.containment(S3, 4)


def test_classification_counts_at_n3():
    # oracle values come from the brute-force predicates above
    reports = [tf.classify(t) for t in tf.enumerate_tables(S3)]
    assert len(reports) == 128
    assert sum(r.grade1_additive for r in reports) == 8
    assert sum(r.grade2_additive for r in reports) == 64
    assert sum(r.homomorphism for r in reports) == 3
    assert sum(r.multiplicative for r in reports) == 8
    assert sum(r.unital for r in reports) == 64


@given(tables3)
def test_predicates_match_brute_force(t):
    assert tf.is_grade1_additive(t) == brute_grade1(t)
    assert tf.is_grade2_additive(t) == brute_grade2(t)


@given(tables3)
def test_two_point_condition_iff_grade2(t):
    assert tf.check_two_point(t) == tf.is_grade2_additive(t)


@given(tables3, tables3)
def test_table_ring_operations(s, t):
    assert [(s + t)(m) for m in range(8)] == [s(m) ^ t(m) for m in range(8)]
    assert [(s * t)(m) for m in range(8)] == [s(m) & t(m) for m in range(8)]


def test_three_slit_table_is_grade2_not_grade1():
    # 1 on every doubleton and on Omega, 0 on singletons
    doubletons = [S3.event(*p) for p in combinations(range(1, 4), 2)]
    t = TruthTable.from_events(S3, doubletons + [S3.omega])
    r = tf.classify(t)
    assert r.grade2_additive and not r.grade1_additive
    assert tf.grade1_violation(t) is not None
    # dropping Omega breaks the identity on the three singletons
    broken = TruthTable.from_events(S3, doubletons)
    assert tf.grade2_violation(broken) is not None


def test_interference():
    t = TruthTable.containment(S3, 1) + TruthTable.containment(S3, 2)
    assert tf.interference(t, (1, 2)) == 0
    t2 = TruthTable.from_events(S3, [S3.event(1, 2)])
    assert tf.interference(t2, (1, 2)) == 1
    with pytest.raises(ArgumentError):
        tf.interference(t2, (1, 1))
    with pytest.raises(ArgumentError):
        tf.interference(t2, (1,))


def test_decompose_additive_round_trip():
    t = tf.table_of_additive(S3, [1, 3])
    assert tf.decompose_additive(t) == [1, 3]
    with pytest.raises(DegenerateError):
        tf.decompose_additive(TruthTable.zero(S3))
    with pytest.raises(NotAdditiveError):
        tf.decompose_additive(TruthTable.from_events(S3, [S3.event(1, 2)]))


def test_decompose_multiplicative_round_trip():
    b = S3.event(1, 3)
    t = tf.table_of_multiplicative(b)
    assert tf.decompose_multiplicative(t) == b
    with pytest.raises(DegenerateError):
        tf.decompose_multiplicative(TruthTable.zero(S3))
    with pytest.raises(NotMultiplicativeError):
        tf.decompose_multiplicative(tf.table_of_additive(S3, [1, 2]))


def test_enumeration_order_and_capacity():
    values = [t.values for t in tf.enumerate_tables(OutcomeSpace(2))]
    assert values == sorted(values) and len(values) == 8
    with pytest.raises(CapacityError):
        next(tf.enumerate_tables(OutcomeSpace(5)))


def test_report_to_dict_keys():
    d = tf.classify(TruthTable.containment(S3, 1)).to_dict()
    assert d == {
        "unital": True,
        "grade1_additive": True,
        "multiplicative": True,
        "grade2_additive": True,
        "homomorphism": True,
        "two_point_condition": True,
    }
