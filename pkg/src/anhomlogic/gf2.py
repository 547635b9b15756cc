"""Bit-packed linear algebra over GF(2).

Vectors and matrix rows are Python ints used as bit strings: coordinate ``j``
lives in bit ``j`` (little-endian).  Python ints are arbitrary precision, so a
row of any width is a single word-parallel XOR operand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArgumentError, ShapeError


def parity(x: int) -> int:
    return x.bit_count() & 1


def iter_bits(x: int):
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Gf2Vector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ShapeError("negative vector length")
        if self.bits < 0 or self.bits >> self.length:
            raise ShapeError(f"bits set beyond length {self.length}")

    @classmethod
    def from_list(cls, values: Sequence[int]) -> Gf2Vector:
        bits = 0
        for j, v in enumerate(values):
            if v not in (0, 1):
                raise ArgumentError(f"GF(2) entries must be 0 or 1, got {v!r}")
            if v:
                bits |= 1 << j
        return cls(len(values), bits)

    @classmethod
    def unit(cls, length: int, j: int) -> Gf2Vector:
        return cls(length, 1 << j)

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __len__(self) -> int:
        return self.length

    def __add__(self, other: Gf2Vector) -> Gf2Vector:
        if self.length != other.length:
            raise ShapeError(f"cannot add vectors of length {self.length} and {other.length}")
        return Gf2Vector(self.length, self.bits ^ other.bits)

    __sub__ = __add__

    def dot(self, other: Gf2Vector) -> int:
        if self.length != other.length:
            raise ShapeError("dot product of vectors with different lengths")
        return parity(self.bits & other.bits)

    def is_zero(self) -> bool:
        return self.bits == 0

    def weight(self) -> int:
        return self.bits.bit_count()

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def __str__(self) -> str:
        return "".join(str(b) for b in self.to_list())


@dataclass(frozen=True)
class Gf2Matrix:
    """Row-major matrix; ``rows[i]`` holds row ``i`` with column ``j`` at bit ``j``."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ShapeError("negative matrix dimension")
        if len(self.rows) != self.nrows:
            raise ShapeError(f"expected {self.nrows} rows, got {len(self.rows)}")
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ShapeError(f"row has bits beyond column {self.ncols}")

    @classmethod
    def zero(cls, nrows: int, ncols: int | None = None) -> Gf2Matrix:
        ncols = nrows if ncols is None else ncols
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], ncols: int | None = None) -> Gf2Matrix:
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise ShapeError("ragged matrix rows")
            rows.append(Gf2Vector.from_list(row).bits)
        return cls(len(entries), ncols, tuple(rows))

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[int]) -> Gf2Matrix:
        """Build from column bit patterns (bit ``i`` of ``columns[j]`` is entry (i, j))."""
        rows = [0] * nrows
        for j, col in enumerate(columns):
            for i in iter_bits(col):
                if i >= nrows:
                    raise ShapeError("column has bits beyond the row count")
                rows[i] |= 1 << j
        return cls(nrows, len(columns), tuple(rows))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(ij)
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> Gf2Vector:
        return Gf2Vector(self.ncols, self.rows[i])

    def column(self, j: int) -> Gf2Vector:
        bits = 0
        for i, r in enumerate(self.rows):
            if (r >> j) & 1:
                bits |= 1 << i
        return Gf2Vector(self.nrows, bits)

    def columns(self) -> list[int]:
        return [self.column(j).bits for j in range(self.ncols)]

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def transpose(self) -> Gf2Matrix:
        return Gf2Matrix(self.ncols, self.nrows, tuple(self.columns()))

    def is_zero(self) -> bool:
        return not any(self.rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __add__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape} matrices")
        return Gf2Matrix(self.nrows, self.ncols, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    __sub__ = __add__

    def __matmul__(self, other):
        if isinstance(other, Gf2Matrix):
            return mat_mul(self, other)
        if isinstance(other, Gf2Vector):
            return mat_vec(self, other)
        return NotImplemented

    def __str__(self) -> str:
        return "\n".join("".join(str(b) for b in row) for row in self.to_lists())


def mat_mul(m: Gf2Matrix, n: Gf2Matrix) -> Gf2Matrix:
    if m.ncols != n.nrows:
        raise ShapeError(f"cannot multiply {m.shape} by {n.shape}")
    nrows = n.rows
    out = []
    for r in m.rows:
        acc = 0
        for k in iter_bits(r):
            acc ^= nrows[k]
        out.append(acc)
    return Gf2Matrix(m.nrows, n.ncols, tuple(out))


def mat_vec(m: Gf2Matrix, v: Gf2Vector) -> Gf2Vector:
    if m.ncols != v.length:
        raise ShapeError(f"cannot apply {m.shape} matrix to a vector of length {v.length}")
    bits = 0
    for i, r in enumerate(m.rows):
        if parity(r & v.bits):
            bits |= 1 << i
    return Gf2Vector(m.nrows, bits)


def _reduce(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """In-place RREF on row ints; returns (rows, pivot columns)."""
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = next((i for i in range(top, len(rows)) if rows[i] & bit), None)
        if pivot is None:
            continue
        rows[top], rows[pivot] = rows[pivot], rows[top]
        prow = rows[top]
        for i in range(len(rows)):
            if i != top and rows[i] & bit:
                rows[i] ^= prow
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows, pivots


def row_reduce(m: Gf2Matrix) -> tuple[Gf2Matrix, int]:
    """Reduced row-echelon form and rank.  Pivot rows come first."""
    rows, pivots = _reduce(list(m.rows), m.ncols)
    return Gf2Matrix(m.nrows, m.ncols, tuple(rows)), len(pivots)


def pivot_columns(m: Gf2Matrix) -> list[int]:
    return _reduce(list(m.rows), m.ncols)[1]


def rank(m: Gf2Matrix) -> int:
    return len(pivot_columns(m))


def null_space_basis(m: Gf2Matrix) -> list[Gf2Vector]:
    """Basis of ``{v : m v = 0}``, one vector per free column in increasing order.

    The vector for free column ``f`` has a 1 at ``f``, zeros at the other free
    columns, and whatever the pivot columns need.  This basis depends only on
    the null space itself, so it doubles as a canonical form.
    """
    rows, pivots = _reduce(list(m.rows), m.ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for r, col in enumerate(pivots):
            if (rows[r] >> free) & 1:
                bits |= 1 << col
        basis.append(Gf2Vector(m.ncols, bits))
    return basis


def matrix_from_vectors(vectors: Iterable[Gf2Vector], length: int) -> Gf2Matrix:
    """Stack vectors as the rows of a matrix."""
    rows = []
    for v in vectors:
        if v.length != length:
            raise ShapeError("vectors of mixed length")
        rows.append(v.bits)
    return Gf2Matrix(len(rows), length, tuple(rows))


def span_rank(vectors: Iterable[Gf2Vector], length: int) -> int:
    return rank(matrix_from_vectors(vectors, length))


def column_space_basis(m: Gf2Matrix) -> list[Gf2Vector]:
    """Independent columns of ``m`` spanning its range."""
    # pivot columns of the RREF index a maximal independent set of columns
    return [m.column(j) for j in pivot_columns(m)]


def canonical_basis(vectors: Iterable[Gf2Vector], length: int) -> list[Gf2Vector]:
    """Canonical basis of the span: the null-space basis of its annihilator."""
    annihilator = null_space_basis(matrix_from_vectors(vectors, length))
    return null_space_basis(matrix_from_vectors(annihilator, length))


def in_span(v: Gf2Vector, vectors: Sequence[Gf2Vector]) -> bool:
    base = span_rank(vectors, v.length)
    return span_rank([*vectors, v], v.length) == base
