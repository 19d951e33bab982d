"""The integral Specht module S^λ_Z.

- `Tabloid`, `TabloidVector`, `polytabloid_expansion`: The ambient M^λ_Z.
- `GarnirSpec`, `garnir_sum`, `garnir_specs`, `mapping_sign`: Garnir transversals.
- `SpechtVector`, `Straightener`, `straightener`, `straighten`, `column_sort`,
    `act_on_tableau`: Straightening onto the standard basis.
- `specht_action_matrix`, `specht_generator_matrices`: The module action.
"""

from specht_hom.specht.garnir import GarnirSpec, garnir_specs, garnir_sum, mapping_sign
from specht_hom.specht.straighten import (
    SpechtVector,
    Straightener,
    act_on_tableau,
    column_sort,
    specht_action_matrix,
    specht_generator_matrices,
    straighten,
    straightener,
)
from specht_hom.specht.tabloids import Tabloid, TabloidVector, polytabloid_expansion
