"""Exact linear algebra over GF(2) with bit-packed rows.

Rows are Python ints used as bitsets (bit j of row i is the entry in
column j), so row operations are single word-level XORs.  Pivoting is
deterministic (lowest available index) to keep downstream cycle bases
reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BitMatrix:
    """Immutable matrix over GF(2); ``rows_bits[i]`` packs row i."""

    rows: int
    cols: int
    rows_bits: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.rows_bits) != self.rows:
            raise ValueError("row count mismatch")
        mask = (1 << self.cols) - 1
        for r in self.rows_bits:
            if r < 0 or r & ~mask:
                raise ValueError("entry outside column range")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "BitMatrix":
        """Build from 0/1 entry lists; ``cols`` is required if there are no rows."""
        packed = []
        width = cols
        for row in rows:
            row = list(row)
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError("ragged rows")
            bits = 0
            for j, e in enumerate(row):
                if e & 1:
                    bits |= 1 << j
            packed.append(bits)
        if width is None:
            raise ValueError("cols required for an empty matrix")
        return cls(len(packed), width, tuple(packed))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("entry out of bounds")
        return (self.rows_bits[i] >> j) & 1

    def column_bits(self) -> list[int]:
        """Columns as bitsets (bit i of column j is entry (i, j))."""
        cols = [0] * self.cols
        for i, r in enumerate(self.rows_bits):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return cols

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.cols, self.rows, tuple(self.column_bits()))

    def mul(self, other: "BitMatrix") -> "BitMatrix":
        """Matrix product over GF(2)."""
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in product")
        my_cols = self.column_bits()
        out_cols = []
        for c in other.column_bits():
            acc = 0
            while c:
                low = c & -c
                acc ^= my_cols[low.bit_length() - 1]
                c ^= low
            out_cols.append(acc)
        return BitMatrix(other.cols, self.rows, tuple(out_cols)).transpose()

    def mul_vector(self, v: int) -> int:
        """Apply to a column vector packed as a bitset of length ``cols``."""
        acc = 0
        cols = self.column_bits()
        while v:
            low = v & -v
            acc ^= cols[low.bit_length() - 1]
            v ^= low
        return acc

    def is_zero(self) -> bool:
        return not any(self.rows_bits)

    def add(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return BitMatrix(
            self.rows, self.cols,
            tuple(a ^ b for a, b in zip(self.rows_bits, other.rows_bits)),
        )


def _lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def rank(m: BitMatrix) -> int:
    """Rank over GF(2), by row reduction against a pivot table."""
    pivots: dict[int, int] = {}
    for row in m.rows_bits:
        row = _reduce_row(row, pivots)
        if row:
            pivots[_lowest_bit(row)] = row
    return len(pivots)


def _reduce_row(row: int, pivots: dict[int, int]) -> int:
    while row:
        p = pivots.get(_lowest_bit(row))
        if p is None:
            return row
        row ^= p
    return 0


def kernel_basis(m: BitMatrix) -> list[int]:
    """Basis of the null space, as column-index bitsets.

    Eliminates the rows of the transpose augmented with an identity
    block; rows whose matrix part cancels yield kernel vectors.  The
    deterministic pivot order makes the basis reproducible.
    """
    shift = m.rows
    pivots: dict[int, int] = {}
    basis = []
    for j, col in enumerate(m.column_bits()):
        aug = col | (1 << (shift + j))
        while aug & ((1 << shift) - 1):
            p = pivots.get(_lowest_bit(aug))
            if p is None:
                break
            aug ^= p
        if aug & ((1 << shift) - 1):
            pivots[_lowest_bit(aug)] = aug
        else:
            basis.append(aug >> shift)
    return basis


def homology_dims(boundaries: Sequence[BitMatrix]) -> dict[int, int]:
    """Homology dimensions of a chain complex over GF(2).

    ``boundaries[k]`` is the map out of degree k, with ``cols`` equal to
    the number of degree-k generators and ``rows`` equal to the number in
    degree k-1 (``boundaries[0]`` must have 0 rows).  Returns the
    dimension of kernel/image for every degree that has generators.

    Raises ValueError if consecutive maps fail to compose to zero.
    """
    top = len(boundaries) - 1
    if top < 0:
        return {}
    if boundaries[0].rows != 0:
        raise ValueError("degree-0 boundary must have an empty target")
    for k in range(top):
        if boundaries[k].cols != boundaries[k + 1].rows:
            raise ValueError(f"shape mismatch between degrees {k} and {k + 1}")
        if not boundaries[k].mul(boundaries[k + 1]).is_zero():
            raise ValueError(f"boundary maps at degrees {k + 1}, {k} do not compose to zero")
    ranks = [rank(b) for b in boundaries] + [0]
    dims = {}
    for k, b in enumerate(boundaries):
        if b.cols > 0:
            dims[k] = b.cols - ranks[k] - ranks[k + 1]
    return dims


def quotient_representatives(kernel: Sequence[int], image: Sequence[int]) -> list[int]:
    """Kernel vectors completing a basis of the image span (cycle coset reps)."""
    pivots: dict[int, int] = {}
    for v in image:
        v = _reduce_row(v, pivots)
        if v:
            pivots[_lowest_bit(v)] = v
    reps = []
    for v in kernel:
        red = _reduce_row(v, pivots)
        if red:
            pivots[_lowest_bit(red)] = red
            reps.append(v)
    return reps


class CoordinateSolver:
    """Expresses vectors in a fixed spanning list, over GF(2).

    Built once per basis; ``coordinates(v)`` returns the combination
    bitset (bit i set when basis vector i occurs) or raises if ``v`` is
    outside the span.  Internally keeps the stored vectors mutually
    reduced so no vector contains another's pivot bit; a single pass
    over the pivots then decides membership.
    """

    def __init__(self, basis: Sequence[int]):
        self._pivots: dict[int, tuple[int, int]] = {}  # pivot -> (vector, combination)
        for i, v in enumerate(basis):
            vec, comb = self._reduce(v, 1 << i)
            if vec:
                p = _lowest_bit(vec)
                for q, (w, c) in self._pivots.items():
                    if (w >> p) & 1:
                        self._pivots[q] = (w ^ vec, c ^ comb)
                self._pivots[p] = (vec, comb)

    def _reduce(self, vec: int, comb: int) -> tuple[int, int]:
        for p in sorted(self._pivots):
            if (vec >> p) & 1:
                w, c = self._pivots[p]
                vec ^= w
                comb ^= c
        return vec, comb

    def coordinates(self, v: int) -> int:
        vec, comb = self._reduce(v, 0)
        if vec:
            raise ValueError("vector not in span")
        return comb
