"""Homomorphisms θ̂_𝔡: S^λ_Z → M_Z(α|β).

- `in_R`, `in_C`, `in_R_by_group`, `in_C_by_group`: ℛ and 𝒞.
- `omega`, `a_coeff`, `a_coeff_orbit`, `stab_column_order`, `require_R`:
    The coefficients a_{d,𝔡}.
- `ThetaMethod`, `HomMatrix`, `a_table`, `vartheta`, `theta_matrix`,
    `gamma_sstd`, `theta_sstd`, `theta_on_transversal`,
    `transversal_to_distinguished`: The matrices of θ̂_𝔡.
- `PreorderRelation`, `tableau_preorder`, `preorder`, `li_condition`:
    The column pre-order.
"""

from specht_hom.hom.coeffs import (
    a_coeff,
    a_coeff_orbit,
    omega,
    require_R,
    stab_column_order,
)
from specht_hom.hom.predicates import in_C, in_C_by_group, in_R, in_R_by_group
from specht_hom.hom.preorder import (
    PreorderRelation,
    li_condition,
    preorder,
    tableau_preorder,
)
from specht_hom.hom.theta import (
    HomMatrix,
    ThetaMethod,
    a_table,
    gamma_sstd,
    theta_matrix,
    theta_on_transversal,
    theta_sstd,
    transversal_to_distinguished,
    vartheta,
)
