import pytest
from hypothesis import given, strategies as st

from anhomlogic.errors import ArgumentError, CapacityError, DisjointnessError, IndexRangeError
from anhomlogic.events import Event, OutcomeSpace, ProductEvent, combine, square, submasks

SPACE = OutcomeSpace(5)
subsets = st.sets(st.integers(1, 5))


def ev(s):
    return Event.of(SPACE, s)


def test_space_sizes():
    s = OutcomeSpace(4)
    assert (s.num_events, s.dim, s.full_mask) == (16, 10, 0b1111)
    assert list(s.outcomes()) == [1, 2, 3, 4]
    assert len(list(s.events())) == 16


@pytest.mark.parametrize("n", [0, 17])
def test_space_capacity(n):
    with pytest.raises(CapacityError):
        OutcomeSpace(n)


def test_event_text_and_membership():
    a = SPACE.event(3, 1)
    assert str(a) == "{1,3}"
    assert str(SPACE.empty) == "{}"
    assert 3 in a and 2 not in a and 9 not in a
    assert a.elements() == (1, 3) and len(a) == 2


def test_out_of_range_outcome():
    with pytest.raises(IndexRangeError):
        SPACE.event(6)
    with pytest.raises(IndexRangeError):
        Event(SPACE, 1 << 5)


@given(subsets, subsets)
def test_set_operations_match_python_sets(x, y):
    a, b = ev(x), ev(y)
    assert set(a & b) == x & y
    assert set(a | b) == x | y
    assert set(a ^ b) == x ^ y
    assert set(a.complement()) == set(range(1, 6)) - x
    assert a.issubset(b) == (x <= y)
    assert a.isdisjoint(b) == (not x & y)
    assert combine(a, b, "complement-of-first") == a.complement()


@given(subsets, subsets)
def test_disjoint_union(x, y):
    a, b = ev(x), ev(y)
    if x & y:
        with pytest.raises(DisjointnessError):
            a.disjoint_union(b)
    else:
        assert combine(a, b, "disjoint-union") == a | b


def test_combine_rejects_unknown_op():
    with pytest.raises(ArgumentError):
        combine(SPACE.empty, SPACE.omega, "difference")


def test_mixed_spaces_rejected():
    with pytest.raises(ArgumentError):
        SPACE.omega & OutcomeSpace(3).omega


def test_submasks_enumerates_every_subset_once():
    subs = list(submasks(0b1011))
    assert len(subs) == 8 and len(set(subs)) == 8
    assert all(s & ~0b1011 == 0 for s in subs)
    assert subs[0] == 0b1011 and subs[-1] == 0


@given(subsets)
def test_square_holds_exactly_the_pairs(x):
    sq = square(ev(x))
    assert set(sq.pairs()) == {(i, j) for i in x for j in x}
    assert len(sq) == len(x) ** 2


def test_product_event():
    p = ProductEvent.of(SPACE, [(1, 2), (5, 5)])
    assert (1, 2) in p and (2, 1) not in p and (9, 9) not in p
    assert p.pairs() == ((1, 2), (5, 5))
    assert p.mask == (1 << 1) | (1 << 24)
    with pytest.raises(IndexRangeError):
        ProductEvent.of(SPACE, [(0, 1)])


def test_product_space_capacity():
    assert ProductEvent(OutcomeSpace(4), 0).product_space().n == 16
    with pytest.raises(CapacityError):
        ProductEvent(SPACE, 0).product_space()
