"""λ-tableaux of type (α|β) and the semistandard condition.

Implements:
- `Color`: A colour c_k or d_k, totally ordered c_1 < c_2 < ... < d_1 < d_2 < ...
- `palette`: The colours of a bicomposition, one per block.
- `value_colors`: The colour of every value 1..n under T_0.
- `ColorTableau`: A colouring of [λ] with α_i nodes c_i and β_j nodes d_j.
- `enumerate_color_tableaux`: All λ-tableaux of type (α|β).
- `is_semistandard`: The signed semistandard test.
- `enumerate_semistandard`: All semistandard λ-tableaux of type (α|β).
- `rows_repeat_only_unsigned`, `columns_repeat_only_signed`: The repeat conditions.
- `stabilizer_order`: |stab_{C_{t0}}(T)|, a product of factorials of multiplicities.
"""

import math
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cache
from typing import NamedTuple

from sympy.utilities.iterables import multiset_permutations

from specht_hom.exceptions import InvalidObjectError, ShapeMismatchError
from specht_hom.tableaux.partitions import Bicomposition, Partition


class Color(NamedTuple):
    """A colour c_k (unsigned) or d_k (signed).

    Tuple order gives c_1 < c_2 < ... < d_1 < d_2 < ...

    Attributes:
        signed: False for c-colours, True for d-colours.
        index: The 1-based index k.
    """

    signed: bool
    index: int

    def __str__(self) -> str:
        return f"{'d' if self.signed else 'c'}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Color":
        """Parse "c1", "d2", ..."""
        kind, index = text[:1], text[1:]
        if kind not in ("c", "d") or not index.isdigit() or int(index) < 1:
            raise InvalidObjectError(f"Not a colour: {text!r}")
        return cls(kind == "d", int(index))


@cache
def palette(ab: Bicomposition) -> tuple[Color, ...]:
    """The colour of each block of S_{α|β}, in block order."""
    return tuple(Color(False, k) for k in range(1, len(ab.alpha) + 1)) + tuple(
        Color(True, k) for k in range(1, len(ab.beta) + 1)
    )


@cache
def value_colors(ab: Bicomposition) -> tuple[Color, ...]:
    """Entry v-1 is the colour of value v: values 1..α_1 are c_1, and so on."""
    return tuple(
        color for color, part in zip(palette(ab), ab.concatenated) for _ in range(part)
    )


@dataclass(frozen=True)
class ColorTableau:
    """A λ-tableau of type (α|β).

    Attributes:
        rows: The colours, row by row.
        type: The bicomposition (α|β) fixing the colour multiplicities.
    """

    rows: tuple[tuple[Color, ...], ...]
    type: Bicomposition

    def __post_init__(self) -> None:
        counts = Counter(c for row in self.rows for c in row)
        expected = Counter(dict(zip(palette(self.type), self.type.concatenated)))
        if counts != expected:
            raise InvalidObjectError(
                f"Colour multiplicities {dict(counts)} do not match type {self.type}"
            )

    @property
    def shape(self) -> Partition:
        """The shape λ."""
        return Partition(tuple(len(row) for row in self.rows))

    def __getitem__(self, cell: tuple[int, int]) -> Color:
        return self.rows[cell[0] - 1][cell[1] - 1]

    def columns(self) -> tuple[tuple[Color, ...], ...]:
        """The colours, column by column, top to bottom."""
        if not self.rows:
            return ()
        return tuple(
            tuple(row[j] for row in self.rows if len(row) > j)
            for j in range(len(self.rows[0]))
        )

    def row_contents(self) -> tuple[tuple[Color, ...], ...]:
        """Sorted colour multiset of every row."""
        return tuple(tuple(sorted(row)) for row in self.rows)

    def column_contents(self) -> tuple[tuple[Color, ...], ...]:
        """Sorted colour multiset C_j(T) of every column."""
        return tuple(tuple(sorted(col)) for col in self.columns())

    def reading_word(self) -> tuple[Color, ...]:
        """The row-reading word."""
        return tuple(c for row in self.rows for c in row)

    def __str__(self) -> str:
        return "/".join(",".join(map(str, row)) for row in self.rows)


def _check_sizes(shape: Partition, ab: Bicomposition) -> None:
    if shape.n != ab.n:
        raise ShapeMismatchError(f"|λ| = {shape.n} but (α|β) = ({ab}) has n = {ab.n}")


def _fill(shape: Partition, word: tuple[Color, ...]) -> tuple[tuple[Color, ...], ...]:
    rows: list[tuple[Color, ...]] = []
    start = 0
    for part in shape.parts:
        rows.append(word[start : start + part])
        start += part
    return tuple(rows)


def enumerate_color_tableaux(shape: Partition, ab: Bicomposition) -> list[ColorTableau]:
    """All λ-tableaux of type (α|β), sorted by reading word.

    Raises:
        ShapeMismatchError: If |λ| differs from the size of (α|β).
    """
    _check_sizes(shape, ab)
    colors = palette(ab)
    codes = [k for k, part in enumerate(ab.concatenated) for _ in range(part)]
    # block codes sort like the colours they stand for
    words = sorted(tuple(w) for w in multiset_permutations(codes))
    return [
        ColorTableau(_fill(shape, tuple(colors[k] for k in word)), ab) for word in words
    ]


def rows_repeat_only_unsigned(tableau: ColorTableau) -> bool:
    """Whether every colour repeated within a row is a c-colour."""
    return all(
        m == 1 or not color.signed
        for row in tableau.rows
        for color, m in Counter(row).items()
    )


def columns_repeat_only_signed(tableau: ColorTableau) -> bool:
    """Whether every colour repeated within a column is a d-colour."""
    return all(
        m == 1 or color.signed
        for col in tableau.columns()
        for color, m in Counter(col).items()
    )


def is_semistandard(tableau: ColorTableau) -> bool:
    """Whether T is semistandard in the signed sense.

    Rows and columns weakly increase; a row may repeat only c-colours and a
    column may repeat only d-colours.
    """
    for row in tableau.rows:
        for left, right in zip(row, row[1:]):
            if left > right or (left == right and left.signed):
                return False
    for col in tableau.columns():
        for top, bottom in zip(col, col[1:]):
            if top > bottom or (top == bottom and not top.signed):
                return False
    return True


def _semistandard_words(shape: Partition, ab: Bicomposition) -> Iterator[list[Color]]:
    cells = shape.cells()
    index = {cell: k for k, cell in enumerate(cells)}
    remaining = Counter(value_colors(ab))
    colors = sorted(remaining)
    word: list[Color] = []

    def place(k: int) -> Iterator[list[Color]]:
        if k == len(cells):
            yield list(word)
            return
        i, j = cells[k]
        left = word[index[(i, j - 1)]] if j > 1 else None
        above = word[index[(i - 1, j)]] if i > 1 else None
        for color in colors:
            if not remaining[color]:
                continue
            if left is not None and (left > color or (left == color and color.signed)):
                continue
            if above is not None and (
                above > color or (above == color and not color.signed)
            ):
                continue
            remaining[color] -= 1
            word.append(color)
            yield from place(k + 1)
            word.pop()
            remaining[color] += 1

    yield from place(0)


def enumerate_semistandard(shape: Partition, ab: Bicomposition) -> list[ColorTableau]:
    """All semistandard λ-tableaux of type (α|β), in reading-word order.

    Equal to filtering `enumerate_color_tableaux` by `is_semistandard`, but
    found by backtracking over the cells.

    Raises:
        ShapeMismatchError: If |λ| differs from the size of (α|β).
    """
    _check_sizes(shape, ab)
    return [
        ColorTableau(_fill(shape, tuple(word)), ab)
        for word in _semistandard_words(shape, ab)
    ]


def stabilizer_order(tableau: ColorTableau) -> int:
    """|stab_{C_t}(T)| for any t: Π over columns Π over colours of (multiplicity)!."""
    return math.prod(
        math.factorial(m) for col in tableau.columns() for m in Counter(col).values()
    )
