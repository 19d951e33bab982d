"""Garnir transversals and Garnir sums.

Implements:
- `GarnirSpec`: Column subsets X ⊆ C_j(λ), Y ⊆ C_{j'}(λ) with |X| + |Y| > |C_j(λ)|.
- `garnir_sum`: The pairs (sgn(γ), γ·t) over a Garnir transversal Δ_t.
- `garnir_specs`: Every Garnir specification of a shape.
- `mapping_sign`: Sign of the permutation sending one value list onto another.
"""

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from specht_hom.exceptions import InvalidObjectError
from specht_hom.tableaux import Cell, NumericTableau, Partition


@dataclass(frozen=True)
class GarnirSpec:
    """The cell sets of a Garnir transversal.

    Attributes:
        x_cells: Nonempty cells of column j, top to bottom.
        y_cells: Nonempty cells of column j' > j, top to bottom.
    """

    x_cells: tuple[Cell, ...]
    y_cells: tuple[Cell, ...]

    def validate(self, shape: Partition) -> None:
        """Check the spec against λ.

        Raises:
            InvalidObjectError: If X or Y is empty, leaves [λ], is not inside a
                single column, or if |X| + |Y| does not exceed |C_j(λ)|.
        """
        if not self.x_cells or not self.y_cells:
            raise InvalidObjectError("X and Y must be nonempty")
        cells = set(shape.cells())
        if not cells.issuperset(self.x_cells + self.y_cells):
            raise InvalidObjectError(f"Garnir cells leave [{shape}]")
        x_cols = {c for _, c in self.x_cells}
        y_cols = {c for _, c in self.y_cells}
        if len(x_cols) != 1 or len(y_cols) != 1 or min(x_cols) >= min(y_cols):
            raise InvalidObjectError("X and Y must lie in columns j < j'")
        if len(set(self.x_cells)) + len(set(self.y_cells)) <= shape.column_lengths()[
            min(x_cols) - 1
        ]:
            raise InvalidObjectError("|X| + |Y| must exceed the length of column j")


def mapping_sign(source: Sequence[int], target: Sequence[int]) -> int:
    """Sign of γ on set(source) with γ(source[k]) = target[k]."""
    position = {v: k for k, v in enumerate(sorted(source))}
    perm = [0] * len(source)
    for a, b in zip(source, target):
        perm[position[a]] = position[b]
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def garnir_rows(
    rows: tuple[tuple[int, ...], ...], x_cells: Sequence[Cell], y_cells: Sequence[Cell]
) -> Iterator[tuple[int, tuple[tuple[int, ...], ...]]]:
    """The Garnir sum on raw rows; the identity coset rep is the one keeping t(X)."""
    cells = [*x_cells, *y_cells]
    old = [rows[i - 1][j - 1] for i, j in cells]
    values = sorted(old)
    for chosen in itertools.combinations(values, len(x_cells)):
        rest = [v for v in values if v not in chosen]
        new = [*chosen, *rest]
        grid = [list(row) for row in rows]
        for (i, j), v in zip(cells, new):
            grid[i - 1][j - 1] = v
        yield mapping_sign(old, new), tuple(tuple(row) for row in grid)


def garnir_sum(t: NumericTableau, spec: GarnirSpec) -> list[tuple[int, NumericTableau]]:
    """The terms (sgn(γ), γ·t) of G_Δ^t for the sorted-fill transversal Δ.

    Each coset of S_{t(X)}S_{t(Y)} in S_{t(X∪Y)} is represented by the γ that
    fills X and Y increasingly; there are (|X|+|Y|)! / (|X|!|Y|!) terms.

    Raises:
        InvalidObjectError: If the spec is not valid for the shape of t.
    """
    spec.validate(t.shape)
    return [
        (sign, NumericTableau(rows))
        for sign, rows in garnir_rows(t.rows, spec.x_cells, spec.y_cells)
    ]


def garnir_specs(shape: Partition) -> list[GarnirSpec]:
    """Every Garnir specification of λ, with X and Y listed top to bottom."""
    cols = shape.column_lengths()
    out: list[GarnirSpec] = []
    for j, len_j in enumerate(cols, 1):
        for j2 in range(j + 1, len(cols) + 1):
            len_j2 = cols[j2 - 1]
            for size_x in range(1, len_j + 1):
                for size_y in range(max(1, len_j + 1 - size_x), len_j2 + 1):
                    for xs in itertools.combinations(range(1, len_j + 1), size_x):
                        for ys in itertools.combinations(range(1, len_j2 + 1), size_y):
                            out.append(
                                GarnirSpec(
                                    tuple((i, j) for i in xs),
                                    tuple((i, j2) for i in ys),
                                )
                            )
    return out
