"""Bijective λ-tableaux.

Implements:
- `NumericTableau`: A bijection [λ] → {1, ..., n}, stored row by row.
- `initial_tableau`: The initial tableau t^λ.
- `enumerate_standard_tableaux`: All standard λ-tableaux in reading-word order.
"""

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import cache, cached_property

from specht_hom.exceptions import InvalidObjectError
from specht_hom.tableaux.partitions import Partition

Cell = tuple[int, int]


@dataclass(frozen=True)
class NumericTableau:
    """A λ-tableau t: a bijection from the cells of [λ] onto {1, ..., n}.

    Cells are 1-based (row, column) pairs.

    Attributes:
        rows: The entries, row by row.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        lengths = [len(row) for row in self.rows]
        if not all(lengths) or lengths != sorted(lengths, reverse=True):
            raise InvalidObjectError(f"Rows do not form a Young diagram: {self.rows}")
        values = sorted(v for row in self.rows for v in row)
        if values != list(range(1, len(values) + 1)):
            raise InvalidObjectError(
                f"Entries are not a bijection onto 1..n: {self.rows}"
            )

    @classmethod
    def from_lists(cls, rows: list[list[int]]) -> "NumericTableau":
        """Build a tableau from nested lists."""
        return cls(tuple(tuple(row) for row in rows))

    @cached_property
    def shape(self) -> Partition:
        """The shape λ."""
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def n(self) -> int:
        """Number of cells."""
        return self.shape.n

    def __getitem__(self, cell: Cell) -> int:
        return self.rows[cell[0] - 1][cell[1] - 1]

    @cached_property
    def positions(self) -> dict[int, Cell]:
        """The inverse map t^{-1}: value → cell."""
        return {
            v: (i, j)
            for i, row in enumerate(self.rows, 1)
            for j, v in enumerate(row, 1)
        }

    def columns(self) -> tuple[tuple[int, ...], ...]:
        """The entries, column by column, read top to bottom."""
        if not self.rows:
            return ()
        return tuple(
            tuple(row[j] for row in self.rows if len(row) > j)
            for j in range(len(self.rows[0]))
        )

    def reading_word(self) -> tuple[int, ...]:
        """The row-reading word (row 1 left to right, then row 2, ...)."""
        return tuple(v for row in self.rows for v in row)

    def relabel(self, mapping: Callable[[int], int]) -> "NumericTableau":
        """σ·t = σ∘t for any bijection σ given as a callable."""
        return NumericTableau(
            tuple(tuple(mapping(v) for v in row) for row in self.rows)
        )

    def is_standard(self) -> bool:
        """Whether entries increase along each row and down each column."""
        rows_ok = all(a < b for row in self.rows for a, b in zip(row, row[1:]))
        return rows_ok and all(
            a < b for col in self.columns() for a, b in zip(col, col[1:])
        )

    def __str__(self) -> str:
        return "/".join(",".join(map(str, row)) for row in self.rows)


def initial_tableau(shape: Partition) -> NumericTableau:
    """The initial tableau t^λ with t^λ(i,j) = λ_1 + ... + λ_{i-1} + j."""
    rows: list[tuple[int, ...]] = []
    start = 1
    for part in shape.parts:
        rows.append(tuple(range(start, start + part)))
        start += part
    return NumericTableau(tuple(rows))


def _fillings(shape: tuple[int, ...], value: int) -> Iterator[list[list[int]]]:
    """Standard fillings of `shape` with 1..value, placing `value` at a corner."""
    if value == 0:
        yield [[] for _ in shape]
        return
    for i, part in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if part > below:
            smaller = shape[:i] + (part - 1,) + shape[i + 1 :]
            for filling in _fillings(smaller, value - 1):
                filling[i].append(value)
                yield filling


@cache
def _standard(shape: Partition) -> tuple[NumericTableau, ...]:
    found = [
        NumericTableau(tuple(tuple(row) for row in filling))
        for filling in _fillings(shape.parts, shape.n)
    ]
    return tuple(sorted(found, key=NumericTableau.reading_word))


def enumerate_standard_tableaux(shape: Partition) -> list[NumericTableau]:
    """All standard λ-tableaux, sorted lexicographically by row-reading word.

    This order fixes the standard-polytabloid basis of S^λ and therefore the row
    indexing of every θ̂ matrix.
    """
    return list(_standard(shape))
