"""The homomorphisms θ̂_𝔡: S^λ_Z → M_Z(α|β) as integer matrices.

Implements:
- `ThetaMethod`: How the entries a_{ρ_s^{-1}d,𝔡} are computed.
- `HomMatrix`: The matrix of θ̂_𝔡 on the standard basis and Γ.
- `a_table`: a_{d,𝔡} for every d ∈ Γ.
- `vartheta`: ϑ_𝔡(t) over Γ for any numeric tableau t.
- `theta_matrix`: The matrix of θ̂_𝔡.
- `gamma_sstd`: The representatives d ∈ Γ with T_d semistandard.
- `theta_sstd`: θ̂_𝔡 for every 𝔡 ∈ Γ_sstd.
- `theta_on_transversal`, `transversal_to_distinguished`: θ̂_𝔡 against another
    left transversal and back.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Any

from specht_hom.group import (
    Permutation,
    Transversal,
    coset_decompose,
    coset_tableau,
    distinguished_transversal,
    rho,
)
from specht_hom.hom.coeffs import require_R, a_coeff_orbit
from specht_hom.tableaux import (
    Bicomposition,
    NumericTableau,
    Partition,
    enumerate_standard_tableaux,
    is_semistandard,
)

hom_logger = logging.getLogger(__name__)


class ThetaMethod(Enum):
    """Ways to fill a HomMatrix.

    Attributes:
        TABLE: a_{d',𝔡} once per d' ∈ Γ, then sign equivariance.
        DIRECT: a_coeff_orbit for every entry.
    """

    TABLE = "table"
    DIRECT = "direct"


@dataclass(frozen=True)
class HomMatrix:
    """θ̂_𝔡 with row s holding θ̂_𝔡(e_s) over Γ.

    Attributes:
        shape: λ.
        type: (α|β).
        rep: 𝔡.
        entries: f^λ rows of |Γ| integers.
    """

    shape: Partition
    type: Bicomposition
    rep: Permutation
    entries: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        """f^λ."""
        return len(self.entries)

    @property
    def cols(self) -> int:
        """|Γ|."""
        return self.type.index()

    def is_zero(self) -> bool:
        """Whether θ̂_𝔡 = 0 over Z."""
        return not any(any(row) for row in self.entries)

    def to_json(self) -> dict[str, Any]:
        """The JSON form; entries are decimal strings."""
        return {
            "shape": list(self.shape.parts),
            "type": {
                "alpha": list(self.type.alpha.parts),
                "beta": list(self.type.beta.parts),
            },
            "rep": self.rep.to_json(),
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(v) for v in row] for row in self.entries],
        }


def a_table(
    rep: Permutation, t0: NumericTableau, ab: Bicomposition
) -> tuple[int, ...]:
    """a_{d,𝔡} for d over Γ, in Γ order.

    Raises:
        NotInRError: If 𝔡 ∉ ℛ.
    """
    return tuple(a_coeff_orbit(d, rep, t0, ab) for d in distinguished_transversal(ab))


def _table_entry(
    x: Permutation, table: Sequence[int], gamma: Transversal, ab: Bicomposition
) -> int:
    """a_{x,𝔡} = sgn(ξ_β)·a_{d,𝔡} for x = d·ξ_α·ξ_β^{+|α|}."""
    d, _, xi_beta = coset_decompose(x, ab)
    value = table[gamma.index[d]]
    return value if xi_beta.sign == 1 else -value


def vartheta(
    t: NumericTableau,
    rep: Permutation,
    t0: NumericTableau,
    ab: Bicomposition,
    table: Sequence[int] | None = None,
) -> tuple[int, ...]:
    """ϑ_𝔡(t) = Σ_{d ∈ Γ} a_{ρ_t^{-1}d,𝔡}·(d⊗1⊗ε).

    t need not be standard.

    Args:
        t (NumericTableau): Any λ-tableau.
        rep (Permutation): 𝔡 ∈ ℛ.
        t0 (NumericTableau): The fixed tableau t_0.
        ab (Bicomposition): The type (α|β).
        table (Sequence[int] | None): A precomputed `a_table`.

    Raises:
        NotInRError: If 𝔡 ∉ ℛ.
    """
    gamma = distinguished_transversal(ab)
    if table is None:
        table = a_table(rep, t0, ab)
    inverse = rho(t, t0).inverse()
    return tuple(_table_entry(inverse * d, table, gamma, ab) for d in gamma)


def theta_matrix(
    rep: Permutation,
    t0: NumericTableau,
    ab: Bicomposition,
    method: ThetaMethod = ThetaMethod.TABLE,
) -> HomMatrix:
    """The matrix of θ̂_𝔡; entry (s, d) = a_{ρ_s^{-1}d,𝔡}.

    Raises:
        NotInRError: If 𝔡 ∉ ℛ.
        ShapeMismatchError: If the sizes of t0, 𝔡 and (α|β) differ.
    """
    coset_tableau(rep, t0, ab)
    require_R(rep, t0, ab)
    basis = enumerate_standard_tableaux(t0.shape)
    gamma = distinguished_transversal(ab)
    if method is ThetaMethod.TABLE:
        table = a_table(rep, t0, ab)
        entries = tuple(vartheta(s, rep, t0, ab, table) for s in basis)
    else:
        entries = tuple(
            tuple(
                a_coeff_orbit(rho(s, t0).inverse() * d, rep, t0, ab) for d in gamma
            )
            for s in basis
        )
    hom_logger.debug(
        "θ̂ for 𝔡 = %s, λ = (%s), (α|β) = (%s): %d×%d",
        rep,
        t0.shape,
        ab,
        len(basis),
        len(gamma),
    )
    return HomMatrix(t0.shape, ab, rep, entries)


def gamma_sstd(ab: Bicomposition, t0: NumericTableau) -> list[Permutation]:
    """The d ∈ Γ with T_d semistandard, in Γ order."""
    return [
        d
        for d in distinguished_transversal(ab)
        if is_semistandard(coset_tableau(d, t0, ab))
    ]


def theta_sstd(
    ab: Bicomposition, t0: NumericTableau, method: ThetaMethod = ThetaMethod.TABLE
) -> list[HomMatrix]:
    """θ̂_𝔡 for 𝔡 ∈ Γ_sstd, in Γ order."""
    return [theta_matrix(rep, t0, ab, method) for rep in gamma_sstd(ab, t0)]


def theta_on_transversal(
    rep: Permutation, t0: NumericTableau, ab: Bicomposition, transversal: Transversal
) -> list[list[int]]:
    """Rows θ̂_𝔡(e_s) against the basis r⊗1⊗ε, r in the given transversal.

    Every entry is a_coeff_orbit(ρ_s^{-1}r, 𝔡), computed without the Γ table.

    Raises:
        NotInRError: If 𝔡 ∉ ℛ.
    """
    require_R(rep, t0, ab)
    return [
        [a_coeff_orbit(rho(s, t0).inverse() * r, rep, t0, ab) for r in transversal]
        for s in enumerate_standard_tableaux(t0.shape)
    ]


def transversal_to_distinguished(
    rows: Sequence[Sequence[int]], transversal: Transversal, ab: Bicomposition
) -> tuple[tuple[int, ...], ...]:
    """Re-express rows over r = d·ξ in the Γ basis: r⊗1⊗ε = sgn(ξ_β)·d⊗1⊗ε."""
    gamma = distinguished_transversal(ab)
    placement = []
    for r in transversal:
        d, _, xi_beta = coset_decompose(r, ab)
        placement.append((gamma.index[d], xi_beta.sign))
    out = []
    for row in rows:
        new = [0] * len(gamma)
        for value, (k, sign) in zip(row, placement):
            new[k] = sign * value
        out.append(tuple(new))
    return tuple(out)
