"""The pointed partition complex of {1..n} as a reduced chain complex over GF(2).

Cells in degree k are flags of k-1 interior set partitions; the two
endpoint partitions are implicit, which builds the collapse of the
subcomplexes missing an endpoint directly into the chain model (faces
that drop an endpoint contribute nothing to the boundary).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .gf2 import (
    BitMatrix,
    CoordinateSolver,
    homology_dims,
    kernel_basis,
    quotient_representatives,
)

MAX_N = 9
MAX_HOMOLOGY_N = 7


@dataclass(frozen=True)
class Partition:
    """Set partition of {1..n} in canonical form.

    Blocks are sorted tuples, ordered by least element; canonical form
    is unique per partition, so equality and hashing are structural.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen = sorted(x for b in self.blocks for x in b)
        if seen != list(range(1, self.n + 1)):
            raise ValueError("blocks do not partition {1..n}")
        canon = canonical_blocks(self.blocks)
        if canon != self.blocks:
            raise ValueError("blocks not in canonical form")

    @classmethod
    def from_blocks(cls, n: int, blocks: Sequence[Sequence[int]]) -> "Partition":
        return cls(n, canonical_blocks(blocks))

    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict[int, int]:
        """Element -> index of its block."""
        lookup = {}
        for i, b in enumerate(self.blocks):
            for x in b:
                lookup[x] = i
        return lookup

    def relabel(self, perm: tuple[int, ...]) -> "Partition":
        """Apply the permutation i -> perm[i-1] to the underlying set."""
        return Partition.from_blocks(self.n, [[perm[x - 1] for x in b] for b in self.blocks])

    def __str__(self) -> str:
        return "|".join(",".join(str(x) for x in b) for b in self.blocks)


def canonical_blocks(blocks: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


def discrete_partition(n: int) -> Partition:
    return Partition(n, tuple((i,) for i in range(1, n + 1)))


def indiscrete_partition(n: int) -> Partition:
    return Partition(n, (tuple(range(1, n + 1)),))


def enumerate_partitions(n: int) -> list[Partition]:
    """All set partitions of {1..n}, canonical, in restricted-growth order."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be between 1 and {MAX_N}")
    out = []

    def grow(i: int, blocks: list[list[int]]) -> None:
        if i > n:
            out.append(Partition.from_blocks(n, blocks))
            return
        for b in blocks:
            b.append(i)
            grow(i + 1, blocks)
            b.pop()
        blocks.append([i])
        grow(i + 1, blocks)
        blocks.pop()

    grow(1, [])
    return out


def refines(p: Partition, q: Partition) -> bool:
    """True when every block of p lies inside a block of q."""
    if p.n != q.n:
        raise ValueError("partitions of different sets")
    lookup = q.block_of()
    return all(len({lookup[x] for x in b}) == 1 for b in p.blocks)


@dataclass(frozen=True)
class FlagChain:
    """Chain of partitions with implicit endpoints (discrete and indiscrete).

    ``interior`` lists the strictly increasing partitions between them;
    a chain with k-1 interior entries is a degree-k cell.
    """

    n: int
    interior: tuple[Partition, ...]

    def __post_init__(self) -> None:
        prev_count = self.n
        for p in self.interior:
            if p.n != self.n:
                raise ValueError("partition size mismatch")
            c = p.block_count()
            if not 1 < c < self.n:
                raise ValueError("interior entry equals an endpoint")
            if c >= prev_count:
                raise ValueError("chain not strictly increasing")
            prev_count = c
        for a, b in zip(self.interior, self.interior[1:]):
            if not refines(a, b):
                raise ValueError("consecutive entries do not refine")

    @property
    def degree(self) -> int:
        return len(self.interior) + 1

    def relabel(self, perm: tuple[int, ...]) -> "FlagChain":
        return FlagChain(self.n, tuple(p.relabel(perm) for p in self.interior))


@dataclass(frozen=True)
class PartitionComplex:
    n: int
    generators: dict[int, list[FlagChain]]
    boundaries: dict[int, BitMatrix]  # degree k -> map out of degree k

    def boundary_list(self) -> list[BitMatrix]:
        """Boundaries indexed 0..top, padded with the empty degree 0."""
        top = self.n - 1
        out = [BitMatrix.zero(0, 0)]
        for k in range(1, top + 1):
            out.append(self.boundaries[k])
        return out

    def generator_counts(self) -> dict[int, int]:
        return {k: len(g) for k, g in self.generators.items()}


@dataclass(frozen=True)
class HomologyResult:
    n: int
    dims: dict[int, int]
    cycle_basis: dict[int, list[int]]  # degree -> cycle bitmasks over that degree's generators


@dataclass(frozen=True)
class ActionMatrix:
    permutation: tuple[int, ...]
    degree: int
    matrix: BitMatrix


@lru_cache(maxsize=None)
def build_complex(n: int) -> PartitionComplex:
    """Generators and boundary matrices of the reduced complex, degrees 1..n-1."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n > MAX_N:
        raise ValueError(f"n capped at {MAX_N}")
    interior = [p for p in enumerate_partitions(n) if 1 < p.block_count() < n]
    coarser = {
        p: [q for q in interior if q.block_count() < p.block_count() and refines(p, q)]
        for p in interior
    }

    chains: dict[int, list[tuple[Partition, ...]]] = {k: [] for k in range(1, n)}
    chains[1].append(())

    def extend(prefix: tuple[Partition, ...]) -> None:
        chains[len(prefix) + 1].append(prefix)
        for q in coarser[prefix[-1]]:
            extend(prefix + (q,))

    for p in interior:
        extend((p,))

    generators = {k: [FlagChain(n, c) for c in sorted(chains[k], key=_chain_key)]
                  for k in range(1, n)}
    index = {k: {g.interior: i for i, g in enumerate(generators[k])} for k in range(1, n)}

    boundaries: dict[int, BitMatrix] = {1: BitMatrix.zero(0, len(generators[1]))}
    for k in range(2, n):
        rows = [0] * len(generators[k - 1])
        for j, g in enumerate(generators[k]):
            for t in range(len(g.interior)):
                face = g.interior[:t] + g.interior[t + 1:]
                rows[index[k - 1][face]] ^= 1 << j
        boundaries[k] = BitMatrix(len(generators[k - 1]), len(generators[k]), tuple(rows))
    return PartitionComplex(n, generators, boundaries)


def _chain_key(chain: tuple[Partition, ...]) -> tuple:
    return tuple(p.blocks for p in chain)


@lru_cache(maxsize=None)
def homology(n: int) -> HomologyResult:
    """Mod-2 homology of the partition complex with chosen cycle representatives.

    For n in the supported range the homology is concentrated in the top
    degree n-1 with dimension (n-1)!.
    """
    if not 2 <= n <= MAX_HOMOLOGY_N:
        raise ValueError(f"homology supported for 2 <= n <= {MAX_HOMOLOGY_N}")
    cx = build_complex(n)
    dims = homology_dims(cx.boundary_list())
    basis: dict[int, list[int]] = {}
    for k, d in dims.items():
        if d == 0:
            basis[k] = []
            continue
        cycles = kernel_basis(cx.boundaries[k])
        image = cx.boundaries[k + 1].column_bits() if k + 1 in cx.boundaries else []
        reps = quotient_representatives(cycles, image)
        if len(reps) != d:
            raise AssertionError("representative count disagrees with rank computation")
        basis[k] = reps
    return HomologyResult(n, dims, basis)


def validate_permutation(n: int, perm: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {perm}")
    return perm


def compose_permutations(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i] - 1] for i in range(len(p)))


def induced_action(n: int, perm: Sequence[int]) -> ActionMatrix:
    """Matrix of a permutation's action on top homology, in the stored cycle basis.

    The assignment is functorial: the matrix of a composite is the
    product of the matrices.
    """
    perm = validate_permutation(n, perm)
    hom = homology(n)
    cx = build_complex(n)
    top = n - 1
    gens = cx.generators[top]
    index = {g.interior: i for i, g in enumerate(gens)}

    gen_image = [index[g.relabel(perm).interior] for g in gens]
    basis = hom.cycle_basis[top]
    solver = CoordinateSolver(basis)

    columns = []
    for z in basis:
        moved = 0
        while z:
            low = z & -z
            moved ^= 1 << gen_image[low.bit_length() - 1]
            z ^= low
        columns.append(solver.coordinates(moved))
    m = len(basis)
    rows = [0] * m
    for j, c in enumerate(columns):
        for i in range(m):
            if (c >> i) & 1:
                rows[i] |= 1 << j
    return ActionMatrix(perm, top, BitMatrix(m, m, tuple(rows)))
