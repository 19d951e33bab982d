"""Exact linear algebra over Q and F_p.

- `FieldKind`, `FieldSpec`, `is_prime`: Coefficient fields.
- `exact_matrix`, `rank`, `rank_bareiss`, `rank_gauss`, `stack_rows`: Ranks.
- `hom_dim_oracle`, `DEFAULT_HOM_BOUND`: The dimension of the Hom space.
"""

from specht_hom.linalg.exact import (
    exact_matrix,
    rank,
    rank_bareiss,
    rank_gauss,
    stack_rows,
)
from specht_hom.linalg.fields import FieldKind, FieldSpec, is_prime
from specht_hom.linalg.hom_space import DEFAULT_HOM_BOUND, hom_dim_oracle
