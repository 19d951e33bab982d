"""The dimension of Hom_{FS_n}(S^λ_F, M_F(α|β)) from the intertwining equations.

Implements:
- `hom_dim_oracle`: dim of {X : M(s_k)·X = X·S(s_k), k = 1..n-1} with X of size |Γ|×f^λ.
"""

import logging
from collections import defaultdict

from sympy.polys.matrices import DomainMatrix

from specht_hom.exceptions import ShapeMismatchError, SizeBoundError
from specht_hom.linalg.fields import FieldSpec
from specht_hom.signed import action_matrices
from specht_hom.specht import specht_generator_matrices, straightener
from specht_hom.tableaux import Bicomposition, Partition

hom_space_logger = logging.getLogger(__name__)

DEFAULT_HOM_BOUND = 400


def hom_dim_oracle(
    shape: Partition,
    ab: Bicomposition,
    field: FieldSpec,
    bound: int = DEFAULT_HOM_BOUND,
) -> int:
    """dim_F Hom_{FS_n}(S^λ_F, M_F(α|β)).

    Unknown X[d][t] (d ∈ Γ, t standard) with one equation per (k, d, t):
    Σ_{d'} M_k[d][d']X[d'][t] - Σ_{t'} X[d][t']S_k[t'][t] = 0. The system is
    assembled sparsely and its rank taken over F.

    Raises:
        ShapeMismatchError: If |λ| differs from the size of (α|β).
        SizeBoundError: If |Γ| exceeds `bound`.
    """
    if shape.n != ab.n:
        raise ShapeMismatchError(f"|λ| = {shape.n} but (α|β) = ({ab}) has n = {ab.n}")
    size = ab.index()
    if size > bound:
        raise SizeBoundError(f"|Γ| = {size} for ({ab}) exceeds the bound {bound}")
    f = straightener(shape).dim
    unknowns = f * size
    if shape.n < 2:
        return unknowns
    domain = field.domain
    equations: dict[int, dict[int, object]] = {}
    row = 0
    for m_k, s_k in zip(action_matrices(ab), specht_generator_matrices(shape)):
        for d in range(size):
            for t in range(f):
                coeffs: dict[int, int] = defaultdict(int)
                for d2, value in enumerate(m_k[d]):
                    if value:
                        coeffs[d2 * f + t] += value
                for t2 in range(f):
                    if s_k[t2][t]:
                        coeffs[d * f + t2] -= s_k[t2][t]
                entries = {
                    col: domain(v) for col, v in coeffs.items() if field.reduce(v)
                }
                if entries:
                    equations[row] = entries
                    row += 1
    system = DomainMatrix(equations, (row, unknowns), domain)
    dim = unknowns - (system.rank() if row else 0)
    hom_space_logger.info(
        "dim Hom(S^(%s), M(%s)) over %s = %d (%d unknowns, %d equations)",
        shape,
        ab,
        field,
        dim,
        unknowns,
        row,
    )
    return dim
