"""Straightening of polytabloids onto the standard basis of S^λ_Z.

Implements:
- `SpechtVector`: Integer coordinates over the standard polytabloids.
- `act_on_tableau`: σ·t.
- `column_sort`: Sort every column, returning the sign of the sorting permutation.
- `Straightener`: Per-shape straightening with a locked memo table.
- `straightener`: The shared `Straightener` of a shape.
- `straighten`: Coordinates of e_t over the standard polytabloids.
- `specht_action_matrix`: Matrix of v ↦ σ·v on the standard basis.
- `specht_generator_matrices`: The matrices of the adjacent transpositions.
"""

import logging
import threading
from dataclasses import dataclass
from functools import cache
from typing import Any

from specht_hom.exceptions import ShapeMismatchError
from specht_hom.group import Permutation
from specht_hom.specht.garnir import garnir_rows
from specht_hom.tableaux import NumericTableau, Partition, enumerate_standard_tableaux

straighten_logger = logging.getLogger(__name__)

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SpechtVector:
    """An element of S^λ_Z in the basis enumerate_standard_tableaux(λ).

    Attributes:
        shape: λ.
        coords: One coefficient per standard tableau.
    """

    shape: Partition
    coords: tuple[int, ...]

    def is_zero(self) -> bool:
        """Whether every coordinate vanishes."""
        return not any(self.coords)

    def to_json(self) -> dict[str, Any]:
        """The JSON form; coordinates are decimal strings."""
        return {
            "shape": list(self.shape.parts),
            "basis": "std-lex",
            "coords": [str(c) for c in self.coords],
        }


def act_on_tableau(sigma: Permutation, t: NumericTableau) -> NumericTableau:
    """σ·t, the tableau with entry σ(t(c)) at every cell c.

    Raises:
        ShapeMismatchError: If σ ∉ S_n for n = |t|.
    """
    if sigma.n != t.n:
        raise ShapeMismatchError(f"{sigma} ∉ S_{t.n}")
    return t.relabel(sigma)


def _sorted_with_sign(values: list[int]) -> tuple[int, list[int]]:
    inversions = sum(
        1
        for a in range(len(values))
        for b in range(a + 1, len(values))
        if values[a] > values[b]
    )
    return (-1 if inversions % 2 else 1), sorted(values)


def _column_sort_rows(rows: Rows) -> tuple[int, Rows]:
    grid = [list(row) for row in rows]
    sign = 1
    for j in range(len(rows[0]) if rows else 0):
        height = sum(1 for row in rows if len(row) > j)
        col_sign, column = _sorted_with_sign([grid[i][j] for i in range(height)])
        sign *= col_sign
        for i, v in enumerate(column):
            grid[i][j] = v
    return sign, tuple(tuple(row) for row in grid)


def column_sort(t: NumericTableau) -> tuple[int, NumericTableau]:
    """(sgn(π), π·t) for the π ∈ C_t making every column increase.

    e_t = sgn(π)·e_{π·t}.
    """
    sign, rows = _column_sort_rows(t.rows)
    return sign, NumericTableau(rows)


def _row_descent(rows: Rows) -> tuple[int, int] | None:
    """Leftmost column j, then topmost row i, with t(i,j) > t(i,j+1) (0-based)."""
    for j in range(len(rows[0]) - 1):
        for i, row in enumerate(rows):
            if len(row) <= j + 1:
                break
            if row[j] > row[j + 1]:
                return i, j
    return None


class Straightener:
    """Straightening for one shape λ.

    Memoizes the coordinates of column-sorted non-standard tableaux. The memo
    is shared between threads; lookups are lock-free and inserts take the lock.

    Attributes:
        shape: λ.
        basis: The standard tableaux in basis order.
        cache: Column-sorted rows → coordinates.
    """

    def __init__(self, shape: Partition) -> None:
        self.shape = shape
        self.basis = enumerate_standard_tableaux(shape)
        self.index: dict[Rows, int] = {t.rows: k for k, t in enumerate(self.basis)}
        self.cache: dict[Rows, tuple[int, ...]] = {}
        self._lock = threading.Lock()

    @property
    def dim(self) -> int:
        """f^λ."""
        return len(self.basis)

    def straighten(self, t: NumericTableau) -> SpechtVector:
        """The coordinates of e_t.

        Raises:
            ShapeMismatchError: If t does not have shape λ.
        """
        if t.shape != self.shape:
            raise ShapeMismatchError(f"{t} does not have shape {self.shape}")
        return SpechtVector(self.shape, self._coords(t.rows))

    def _coords(self, rows: Rows) -> tuple[int, ...]:
        sign, rows = _column_sort_rows(rows)
        if rows in self.index:
            unit = [0] * self.dim
            unit[self.index[rows]] = sign
            return tuple(unit)
        cached = self.cache.get(rows)
        if cached is None:
            cached = self._expand(rows)
            with self._lock:
                cached = self.cache.setdefault(rows, cached)
        return cached if sign == 1 else tuple(-c for c in cached)

    def _expand(self, rows: Rows) -> tuple[int, ...]:
        # Columns increase here, so a row descent exists. Every Garnir term
        # other than t itself is larger in the column dominance order, which
        # bounds the recursion.
        descent = _row_descent(rows)
        assert descent is not None
        i, j = descent
        height = sum(1 for row in rows if len(row) > j)
        x_cells = [(r + 1, j + 1) for r in range(i, height)]
        y_cells = [(r + 1, j + 2) for r in range(i + 1)]
        total = [0] * self.dim
        for sign, new_rows in garnir_rows(rows, x_cells, y_cells):
            if new_rows == rows:
                continue
            for k, c in enumerate(self._coords(new_rows)):
                total[k] -= sign * c
        straighten_logger.debug("Straightened %s over %d terms", rows, self.dim)
        return tuple(total)


@cache
def straightener(shape: Partition) -> Straightener:
    """The per-process `Straightener` of λ."""
    return Straightener(shape)


def straighten(t: NumericTableau) -> SpechtVector:
    """The unique integer coordinates of e_t over the standard polytabloids."""
    return straightener(t.shape).straighten(t)


def specht_action_matrix(shape: Partition, sigma: Permutation) -> list[list[int]]:
    """Matrix M of v ↦ σ·v; column s is straighten(σ·s).

    Raises:
        ShapeMismatchError: If σ ∉ S_n for n = |λ|.
    """
    engine = straightener(shape)
    columns = [engine.straighten(act_on_tableau(sigma, s)).coords for s in engine.basis]
    return [[col[r] for col in columns] for r in range(engine.dim)]


def specht_generator_matrices(shape: Partition) -> list[list[list[int]]]:
    """[M(s_1), ..., M(s_{n-1})] for s_k = (k, k+1)."""
    n = shape.n
    return [
        specht_action_matrix(shape, Permutation.from_cycles(n, [(k, k + 1)]))
        for k in range(1, n)
    ]
