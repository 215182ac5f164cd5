"""Dense GF(2) linear algebra on bit-packed rows.

Rows are Python integers used as bitsets (bit ``j`` = column ``j``), which
keeps row operations down to single XORs and makes Gaussian elimination
cache-friendly at the matrix sizes this package works with (a few thousand
columns at most).  All functions are pure; :class:`BitMatrix` values are
immutable after construction.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionError


class BitMatrix:
    """An immutable dense matrix over GF(2).

    ``data[i]`` is row ``i`` packed into an int; bits at or beyond ``cols``
    are guaranteed zero.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[int]):
        if rows < 0 or cols < 0:
            raise DimensionError("matrix dimensions must be nonnegative")
        if len(data) != rows:
            raise DimensionError(f"expected {rows} rows, got {len(data)}")
        mask = (1 << cols) - 1
        self.rows = rows
        self.cols = cols
        self.data = tuple(r & mask for r in data)

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, [0] * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BitMatrix":
        """Build from an iterable of 0/1 iterables (all the same length)."""
        packed = []
        width = None
        for row in rows:
            bits = list(row)
            if width is None:
                width = len(bits)
            elif len(bits) != width:
                raise DimensionError("ragged rows")
            word = 0
            for j, b in enumerate(bits):
                if b & 1:
                    word |= 1 << j
            packed.append(word)
        return cls(len(packed), width or 0, packed)

    # -- basic access --------------------------------------------------

    def row(self, i: int) -> int:
        return self.data[i]

    def bit(self, i: int, j: int) -> int:
        if not (0 <= j < self.cols):
            raise DimensionError(f"column {j} out of range")
        return (self.data[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.data)

    def row_weights(self) -> list[int]:
        return [r.bit_count() for r in self.data]

    def col_weights(self) -> list[int]:
        w = [0] * self.cols
        for r in self.data:
            while r:
                lsb = r & -r
                w[lsb.bit_length() - 1] += 1
                r ^= lsb
        return w

    # -- plumbing ------------------------------------------------------

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            while r:
                lsb = r & -r
                out[lsb.bit_length() - 1] |= 1 << i
                r ^= lsb
        return BitMatrix(self.cols, self.rows, out)

    def mul(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for r in self.data:
            acc = 0
            rr = r
            while rr:
                lsb = rr & -rr
                acc ^= other.data[lsb.bit_length() - 1]
                rr ^= lsb
            out.append(acc)
        return BitMatrix(self.rows, other.cols, out)

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.cols:
            raise DimensionError("column counts differ")
        return BitMatrix(self.rows + other.rows, self.cols, self.data + other.data)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def _rref(m: BitMatrix) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.

    Returns (pivot_rows, pivot_cols): pivot_rows[i] is a packed row whose
    leading 1 is at pivot_cols[i].  Pivoting is leftmost column, topmost
    row, so the output is deterministic.
    """
    work = list(m.data)
    pivot_cols: list[int] = []
    cursor = 0
    for col in range(m.cols):
        bit = 1 << col
        pivot = None
        for r in range(cursor, len(work)):
            if work[r] & bit:
                pivot = r
                break
        if pivot is None:
            continue
        work[cursor], work[pivot] = work[pivot], work[cursor]
        for r in range(len(work)):
            if r != cursor and (work[r] & bit):
                work[r] ^= work[cursor]
        pivot_cols.append(col)
        cursor += 1
        if cursor == len(work):
            break
    return work[: len(pivot_cols)], pivot_cols


def rank(m: BitMatrix) -> int:
    """GF(2) row rank."""
    return len(_rref(m)[1])


def nullspace_basis(m: BitMatrix) -> BitMatrix:
    """Basis of the right kernel {x : m xT = 0}, one row per basis vector.

    Row count is cols(m) - rank(m); the basis is in the deterministic
    one-free-column-per-row form produced by Gauss-Jordan.
    """
    pivot_rows, pivot_cols = _rref(m)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = 1 << free
        fbit = 1 << free
        for prow, pcol in zip(pivot_rows, pivot_cols):
            if prow & fbit:
                vec |= 1 << pcol
        basis.append(vec)
    return BitMatrix(len(basis), m.cols, basis)


def kron(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Kronecker product a (x) b over GF(2)."""
    out = []
    for ra in a.data:
        for rb in b.data:
            word = 0
            rr = ra
            while rr:
                lsb = rr & -rr
                word |= rb << ((lsb.bit_length() - 1) * b.cols)
                rr ^= lsb
            out.append(word)
    return BitMatrix(a.rows * b.rows, a.cols * b.cols, out)


def _pack(v: Sequence[int] | int, cols: int) -> int:
    if isinstance(v, int):
        if v < 0 or v >> cols:
            raise DimensionError("packed vector has bits beyond the column count")
        return v
    bits = list(v)
    if len(bits) != cols:
        raise DimensionError(f"vector length {len(bits)} != {cols} columns")
    word = 0
    for j, b in enumerate(bits):
        if b & 1:
            word |= 1 << j
    return word


def row_space_contains(m: BitMatrix, v: Sequence[int] | int) -> bool:
    """Whether v lies in the GF(2) row space of m.

    v may be a 0/1 sequence of length cols(m) or an int bitset.
    """
    vec = _pack(v, m.cols)
    pivot_rows, pivot_cols = _rref(m)
    for prow, pcol in zip(pivot_rows, pivot_cols):
        if vec & (1 << pcol):
            vec ^= prow
    return vec == 0


class RowSpace:
    """Precomputed row space of a matrix for repeated membership tests."""

    __slots__ = ("cols", "_pivot_rows", "_pivot_cols", "dim")

    def __init__(self, m: BitMatrix):
        self.cols = m.cols
        self._pivot_rows, self._pivot_cols = _rref(m)
        self.dim = len(self._pivot_cols)

    def contains(self, vec: int) -> bool:
        for prow, pcol in zip(self._pivot_rows, self._pivot_cols):
            if vec & (1 << pcol):
                vec ^= prow
        return vec == 0
