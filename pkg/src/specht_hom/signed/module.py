"""The signed Young permutation module M_Z(α|β) on the basis Γ.

Implements:
- `SignedVector`: Integer coordinates over d⊗1⊗ε, d ∈ Γ.
- `act_basis`: σ·(d⊗1⊗ε) = sgn(ξ_β)·(d'⊗1⊗ε).
- `signed_action_matrix`: The matrix of v ↦ σ·v.
- `action_matrices`: The matrices of the adjacent transpositions.
"""

import logging
from dataclasses import dataclass
from typing import Any

from specht_hom.exceptions import ShapeMismatchError
from specht_hom.group import Permutation, coset_decompose, distinguished_transversal
from specht_hom.tableaux import Bicomposition

signed_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedVector:
    """An element of M_Z(α|β) in the Γ basis.

    Attributes:
        type: (α|β).
        coords: One coefficient per representative of Γ.
    """

    type: Bicomposition
    coords: tuple[int, ...]

    def to_json(self) -> dict[str, Any]:
        """The JSON form; coordinates are decimal strings."""
        return {
            "type": {
                "alpha": list(self.type.alpha.parts),
                "beta": list(self.type.beta.parts),
            },
            "basis": "gamma-distinguished",
            "coords": [str(c) for c in self.coords],
        }


def act_basis(
    sigma: Permutation, d: Permutation, ab: Bicomposition
) -> tuple[int, Permutation]:
    """σ·(d⊗1⊗ε) as (sgn(ξ_β), d') where σd = d'·ξ_α·ξ_β^{+|α|}.

    Raises:
        ShapeMismatchError: If σ or d is not in S_n for n = |α| + |β|.
    """
    if sigma.n != ab.n or d.n != ab.n:
        raise ShapeMismatchError(f"{sigma} and {d} must lie in S_{ab.n}")
    rep, _, xi_beta = coset_decompose(sigma * d, ab)
    return xi_beta.sign, rep


def signed_action_matrix(ab: Bicomposition, sigma: Permutation) -> list[list[int]]:
    """|Γ|×|Γ| matrix M with M[d'][d] = sign for σ·d = sign·d'.

    Every column has exactly one nonzero entry, which is ±1.
    """
    gamma = distinguished_transversal(ab)
    matrix = [[0] * len(gamma) for _ in gamma]
    for col, d in enumerate(gamma):
        sign, rep = act_basis(sigma, d, ab)
        matrix[gamma.index[rep]][col] = sign
    return matrix


def action_matrices(ab: Bicomposition) -> list[list[list[int]]]:
    """[M(s_1), ..., M(s_{n-1})] for s_k = (k, k+1)."""
    signed_logger.debug("Building %d generator matrices for (%s)", ab.n - 1, ab)
    return [
        signed_action_matrix(ab, Permutation.from_cycles(ab.n, [(k, k + 1)]))
        for k in range(1, ab.n)
    ]
