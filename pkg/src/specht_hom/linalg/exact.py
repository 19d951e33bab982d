"""Exact ranks of integer matrices over Q and F_p.

Implements:
- `exact_matrix`: An integer matrix as a sympy `DomainMatrix` over ZZ, QQ or GF(p).
- `rank_bareiss`: Rank over Q by fraction-free elimination over ZZ.
- `rank_gauss`: Rank over Q by Gauss-Jordan elimination over QQ.
- `rank`: Rank over a `FieldSpec`.
- `stack_rows`: Concatenate the rows of several matrices.
"""

import logging
from collections.abc import Sequence

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from specht_hom.exceptions import ShapeMismatchError
from specht_hom.linalg.fields import FieldKind, FieldSpec

linalg_logger = logging.getLogger(__name__)

IntMatrix = Sequence[Sequence[int]]


def _width(rows: IntMatrix) -> int:
    widths = {len(row) for row in rows}
    if len(widths) > 1:
        raise ShapeMismatchError(f"Ragged matrix with row lengths {sorted(widths)}")
    return widths.pop() if widths else 0


def exact_matrix(rows: IntMatrix, field: FieldSpec | None = None) -> DomainMatrix:
    """The matrix over ZZ (field None), QQ or GF(p), entries reduced.

    Raises:
        ShapeMismatchError: If the rows have different lengths.
    """
    width = _width(rows)
    domain = ZZ if field is None else field.domain
    return DomainMatrix(
        [[domain(v) for v in row] for row in rows], (len(rows), width), domain
    )


def rank_bareiss(rows: IntMatrix) -> int:
    """Rank over Q from the fraction-free reduced row echelon form over ZZ."""
    if not rows or not _width(rows):
        return 0
    _, _, pivots = exact_matrix(rows).rref_den(method="FF")
    return len(pivots)


def rank_gauss(rows: IntMatrix) -> int:
    """Rank over Q from Gauss-Jordan elimination with rational entries."""
    if not rows or not _width(rows):
        return 0
    _, pivots = exact_matrix(rows, FieldSpec.rationals()).rref(method="GJ")
    return len(pivots)


def rank(rows: IntMatrix, field: FieldSpec) -> int:
    """Rank over F: Bareiss for Q, elimination in GF(p) for F_p."""
    if field.kind is FieldKind.RATIONALS:
        value = rank_bareiss(rows)
    elif not rows or not _width(rows):
        value = 0
    else:
        value = exact_matrix(rows, field).rank()
    linalg_logger.debug("rank over %s of a %d-row matrix: %d", field, len(rows), value)
    return value


def stack_rows(*matrices: IntMatrix) -> list[list[int]]:
    """The rows of every matrix, in order.

    Raises:
        ShapeMismatchError: If the widths differ.
    """
    out = [list(row) for matrix in matrices for row in matrix]
    _width(out)
    return out
