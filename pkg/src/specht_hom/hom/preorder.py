"""The column pre-order ⊵ and the linear-independence condition.

Implements:
- `PreorderRelation`: Both comparison flags of a pair.
- `tableau_preorder`: ⊵ on λ-tableaux of type (α|β).
- `preorder`: ⊵ on S_n through T_d.
- `li_condition`: No column of a semistandard tableau holds p nodes of one colour.
"""

from collections import Counter
from typing import NamedTuple

from specht_hom.group import Permutation, coset_tableau
from specht_hom.tableaux import (
    Bicomposition,
    ColorTableau,
    NumericTableau,
    Partition,
    enumerate_semistandard,
)


class PreorderRelation(NamedTuple):
    """The flags (x ⊵ y, y ⊵ x).

    Attributes:
        geq: x ⊵ y.
        leq: y ⊵ x.
    """

    geq: bool
    leq: bool

    @property
    def equivalent(self) -> bool:
        """x ∼ y: every column multiset agrees."""
        return self.geq and self.leq

    @property
    def greater(self) -> bool:
        """x ▷ y."""
        return self.geq and not self.leq


def tableau_preorder(first: ColorTableau, second: ColorTableau) -> PreorderRelation:
    """Compare the sorted column multisets C_1, C_2, ... lexicographically.

    The first column where they differ decides, and within it the first
    position where the sorted colours differ.
    """
    key_first = first.column_contents()
    key_second = second.column_contents()
    return PreorderRelation(key_first >= key_second, key_second >= key_first)


def preorder(
    d: Permutation, other: Permutation, t0: NumericTableau, ab: Bicomposition
) -> PreorderRelation:
    """d ⊵ d' iff T_d ⊵ T_{d'}."""
    return tableau_preorder(coset_tableau(d, t0, ab), coset_tableau(other, t0, ab))


def li_condition(shape: Partition, ab: Bicomposition, p: int) -> bool:
    """Whether no column of any semistandard T has p or more nodes of one colour.

    Equivalent to p ∤ |stab_{C_{t0}}(T_𝔡)| for every 𝔡 ∈ Γ_sstd.
    """
    return all(
        max(Counter(col).values()) < p
        for tableau in enumerate_semistandard(shape, ab)
        for col in tableau.columns()
    )
