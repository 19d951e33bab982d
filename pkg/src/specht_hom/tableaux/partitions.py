"""Partitions, compositions and bicompositions.

Implements:
- `Partition`: A weakly decreasing sequence of positive integers.
- `Composition`: A finite sequence of positive integers.
- `Bicomposition`: A pair (α|β) of compositions.
- `enumerate_partitions`: All partitions of n, reverse-lexicographic.
- `enumerate_compositions`: All compositions of n, lexicographic.
- `enumerate_bicompositions`: All bicompositions of n.
- `conjugate`: The conjugate partition.
- `hook_lengths`: Hook lengths of the cells of [λ].
- `count_standard`: Number of standard λ-tableaux by the hook length formula.
- `is_p_core`: Whether λ has no hook of length divisible by p.
"""

import math
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cache

from specht_hom.exceptions import InvalidObjectError


@dataclass(frozen=True, order=True)
class Composition:
    """A finite sequence of positive integers.

    Attributes:
        parts: The parts, all positive. May be empty.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(not isinstance(p, int) or p <= 0 for p in self.parts):
            raise InvalidObjectError(
                f"Composition parts must be positive: {self.parts}"
            )

    @property
    def n(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def concat(self, other: "Composition") -> "Composition":
        """The concatenation self ⊔ other."""
        return Composition(self.parts + other.parts)


@dataclass(frozen=True, order=True)
class Partition(Composition):
    """A weakly decreasing sequence of positive integers, e.g. λ = (2,2,1).

    The empty partition is allowed (λ = ∅, n = 0).
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise InvalidObjectError(
                f"Partition must be weakly decreasing: {self.parts}"
            )

    def conjugate(self) -> "Partition":
        """The conjugate partition λ'."""
        return conjugate(self)

    def column_lengths(self) -> tuple[int, ...]:
        """Lengths of the columns of [λ], i.e. the parts of λ'."""
        return self.conjugate().parts

    def cells(self) -> list[tuple[int, int]]:
        """The cells (i, j) of [λ] in row-reading order, 1-based."""
        return [
            (i, j) for i, row in enumerate(self.parts, 1) for j in range(1, row + 1)
        ]


@dataclass(frozen=True, order=True)
class Bicomposition:
    """A bicomposition (α|β) of n = |α| + |β|.

    Viewed as a composition of n by concatenating α and β, so the blocks
    1..α_1, α_1+1..α_1+α_2, ... come first and the signed β blocks last.

    Attributes:
        alpha: The unsigned part.
        beta: The signed part.
    """

    alpha: Composition = Composition()
    beta: Composition = Composition()

    @property
    def n(self) -> int:
        """|α| + |β|."""
        return self.alpha.n + self.beta.n

    @property
    def concatenated(self) -> tuple[int, ...]:
        """The parts of α followed by the parts of β."""
        return self.alpha.parts + self.beta.parts

    def blocks(self) -> list[range]:
        """The consecutive value intervals of S_{α|β}, as ranges of 1-based values."""
        out: list[range] = []
        start = 1
        for part in self.concatenated:
            out.append(range(start, start + part))
            start += part
        return out

    def is_signed_block(self, index: int) -> bool:
        """Whether block `index` (0-based) belongs to β."""
        return index >= len(self.alpha)

    def swap(self) -> "Bicomposition":
        """The bicomposition (β|α)."""
        return Bicomposition(self.beta, self.alpha)

    def index(self) -> int:
        """[S_n : S_{α|β}] = n! / Π α_i! Π β_j!."""
        return math.factorial(self.n) // math.prod(
            math.factorial(p) for p in self.concatenated
        )

    def __str__(self) -> str:
        return f"{self.alpha}|{self.beta}"


@cache
def _partitions(n: int, bound: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first, *rest))
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order.

    Args:
        n (int): A nonnegative integer.

    Returns:
        The partitions, starting with (n) and ending with (1^n); [∅] for n = 0.

    Raises:
        InvalidObjectError: If n is negative.
    """
    if n < 0:
        raise InvalidObjectError(f"n must be nonnegative, got {n}")
    return [Partition(p) for p in _partitions(n, n)]


def enumerate_compositions(n: int) -> list[Composition]:
    """All compositions of n in lexicographic order (2^{n-1} of them, [∅] for n = 0)."""
    if n == 0:
        return [Composition()]
    out: list[Composition] = []
    for first in range(1, n + 1):
        for rest in enumerate_compositions(n - first):
            out.append(Composition((first, *rest.parts)))
    return out


def enumerate_bicompositions(n: int) -> list[Bicomposition]:
    """All bicompositions of n, ordered by |α| then lexicographically."""
    return [
        Bicomposition(alpha, beta)
        for a in range(n + 1)
        for alpha in enumerate_compositions(a)
        for beta in enumerate_compositions(n - a)
    ]


def conjugate(shape: Partition) -> Partition:
    """The conjugate partition, with [λ'] = {(i,j) : (j,i) ∈ [λ]}."""
    if not shape.parts:
        return Partition()
    return Partition(
        tuple(sum(1 for row in shape.parts if row > j) for j in range(shape.parts[0]))
    )


def hook_lengths(shape: Partition) -> dict[tuple[int, int], int]:
    """Hook length of every cell (i, j) of [λ]."""
    cols = shape.column_lengths()
    return {
        (i, j): (shape.parts[i - 1] - j) + (cols[j - 1] - i) + 1
        for i, j in shape.cells()
    }


def count_standard(shape: Partition) -> int:
    """Number of standard λ-tableaux, n! / Π hook lengths."""
    return math.factorial(shape.n) // math.prod(hook_lengths(shape).values())


def is_p_core(shape: Partition, p: int) -> bool:
    """Whether λ is a p-core.

    λ has a rim hook of length p iff some hook length is divisible by p.
    """
    return all(h % p for h in hook_lengths(shape).values())
