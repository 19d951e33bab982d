"""The signed Young permutation module M_Z(α|β).

- `SignedVector`: Coordinates over the distinguished transversal Γ.
- `act_basis`, `signed_action_matrix`, `action_matrices`: The signed action.
"""

from specht_hom.signed.module import (
    SignedVector,
    act_basis,
    action_matrices,
    signed_action_matrix,
)
