"""Membership in ℛ and 𝒞.

Implements:
- `in_R`, `in_C`: The tableau characterizations.
- `in_R_by_group`, `in_C_by_group`: The group-theoretic definitions
    d^{-1}R_{t0}d ∩ S_{α|β} ⊆ S_α and d^{-1}C_{t0}d ∩ S_{α|β} ⊆ S_β^{+|α|}.
"""

from collections.abc import Iterator

from specht_hom.group import (
    Permutation,
    YoungSubgroupSpec,
    column_stabilizer,
    coset_tableau,
    row_stabilizer,
)
from specht_hom.tableaux import (
    Bicomposition,
    NumericTableau,
    columns_repeat_only_signed,
    rows_repeat_only_unsigned,
)


def in_R(d: Permutation, t0: NumericTableau, ab: Bicomposition) -> bool:
    """d ∈ ℛ iff no row of T_d repeats a d-colour."""
    return rows_repeat_only_unsigned(coset_tableau(d, t0, ab))


def in_C(d: Permutation, t0: NumericTableau, ab: Bicomposition) -> bool:
    """d ∈ 𝒞 iff no column of T_d repeats a c-colour."""
    return columns_repeat_only_signed(coset_tableau(d, t0, ab))


def _conjugates_in_young(
    d: Permutation, group: Iterator[Permutation], spec: YoungSubgroupSpec
) -> Iterator[Permutation]:
    inverse = d.inverse()
    for x in group:
        y = inverse * x * d
        if spec.contains(y):
            yield y


def in_R_by_group(d: Permutation, t0: NumericTableau, ab: Bicomposition) -> bool:
    """d^{-1}R_{t0}d ∩ S_{α|β} ⊆ S_α, by enumerating R_{t0}."""
    spec = YoungSubgroupSpec.from_bicomposition(ab)
    return all(
        spec.in_unsigned_factor(y)
        for y in _conjugates_in_young(d, row_stabilizer(t0), spec)
    )


def in_C_by_group(d: Permutation, t0: NumericTableau, ab: Bicomposition) -> bool:
    """d^{-1}C_{t0}d ∩ S_{α|β} ⊆ S_β^{+|α|}, by enumerating C_{t0}."""
    spec = YoungSubgroupSpec.from_bicomposition(ab)
    return all(
        spec.in_signed_factor(y)
        for y in _conjugates_in_young(d, column_stabilizer(t0), spec)
    )
