from itertools import product

import pytest
from hypothesis import given, strategies as st

from anhomlogic.errors import ShapeError
from anhomlogic.gf2 import (
    Gf2Matrix,
    Gf2Vector,
    canonical_basis,
    column_space_basis,
    in_span,
    mat_mul,
    null_space_basis,
    pivot_columns,
    rank,
    row_reduce,
)


@st.composite
def matrices(draw, nrows=None, ncols=None, max_dim=6):
    r = nrows if nrows is not None else draw(st.integers(1, max_dim))
    c = ncols if ncols is not None else draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
    return Gf2Matrix(r, c, tuple(rows))


def brute_rank(m: Gf2Matrix) -> int:
    """log2 of the number of distinct column combinations."""
    cols = [m.column(j).bits for j in range(m.ncols)]
    seen = set()
    for picks in product((0, 1), repeat=len(cols)):
        acc = 0
        for p, c in zip(picks, cols):
            if p:
                acc ^= c
        seen.add(acc)
    return len(seen).bit_length() - 1


def brute_null_space(m: Gf2Matrix) -> set[int]:
    return {v for v in range(1 << m.ncols) if (m @ Gf2Vector(m.ncols, v)).is_zero()}


def test_vector_basics():
    v = Gf2Vector.from_list([1, 0, 1, 1])
    assert v.to_list() == [1, 0, 1, 1]
    assert v.weight() == 3
    assert str(v) == "1011"
    assert v.dot(Gf2Vector.unit(4, 2)) == 1
    assert (v + v).is_zero()


def test_vector_rejects_bad_values():
    with pytest.raises(ValueError):
        Gf2Vector.from_list([0, 2])


def test_identity_and_str():
    assert str(Gf2Matrix.identity(3)) == "100\n010\n001"
    m = Gf2Matrix.from_lists([[1, 1], [0, 1]])
    assert m.to_lists() == [[1, 1], [0, 1]]
    assert m.transpose().to_lists() == [[1, 0], [1, 1]]
    assert m[0, 1] == 1 and m[1, 0] == 0


def test_mat_mul_shape_mismatch():
    with pytest.raises(ShapeError):
        mat_mul(Gf2Matrix.zero(2, 3), Gf2Matrix.zero(2, 3))


@given(matrices(3, 4), matrices(4, 2), matrices(2, 5))
def test_mat_mul_associative(a, b, c):
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


@given(matrices(3, 4), matrices(4, 3), matrices(4, 3))
def test_mat_mul_distributes(a, b, c):
    assert mat_mul(a, b + c) == mat_mul(a, b) + mat_mul(a, c)


@given(matrices(3, 4), matrices(4, 2))
def test_transpose_of_product(a, b):
    assert mat_mul(a, b).transpose() == mat_mul(b.transpose(), a.transpose())


@given(matrices(4, 4))
def test_mat_mul_matches_entrywise_definition(a):
    b = a.transpose()
    got = mat_mul(a, b)
    for i in range(4):
        for j in range(4):
            assert got[i, j] == sum(a[i, k] * b[k, j] for k in range(4)) % 2


@given(matrices(max_dim=5))
def test_rank_matches_brute_force(m):
    assert rank(m) == brute_rank(m)


@given(matrices(max_dim=5))
def test_null_space_matches_brute_force(m):
    basis = null_space_basis(m)
    assert len(basis) + rank(m) == m.ncols
    spanned = {0}
    for v in basis:
        spanned |= {x ^ v.bits for x in spanned}
    assert spanned == brute_null_space(m)


@given(matrices(max_dim=6))
def test_row_reduce_is_reduced(m):
    r, k = row_reduce(m)
    pivots = pivot_columns(m)
    assert k == len(pivots)
    for row, col in enumerate(pivots):
        assert r.column(col) == Gf2Vector.unit(m.nrows, row)
    assert all(r.rows[i] == 0 for i in range(k, m.nrows))


@given(matrices(max_dim=6))
def test_column_space_basis_spans_range(m):
    basis = column_space_basis(m)
    assert len(basis) == rank(m)
    assert all(in_span(m.column(j), basis) for j in range(m.ncols))


@given(matrices(max_dim=6), st.randoms(use_true_random=False))
def test_canonical_basis_depends_only_on_span(m, rnd):
    vecs = [m.row(i) for i in range(m.nrows)]
    shuffled = vecs[:]
    rnd.shuffle(shuffled)
    # add a redundant combination too
    extra = shuffled + [vecs[0] + vecs[-1]]
    assert canonical_basis(vecs, m.ncols) == canonical_basis(extra, m.ncols)


def test_null_space_of_identity_is_empty():
    assert null_space_basis(Gf2Matrix.identity(5)) == []


def test_null_space_order_is_by_free_column():
    m = Gf2Matrix.from_lists([[1, 1, 0, 1]])
    assert [v.to_list() for v in null_space_basis(m)] == [[1, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1]]
