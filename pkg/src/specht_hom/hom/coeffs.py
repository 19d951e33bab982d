"""The sets Ω_{d,𝔡} and the integers a_{d,𝔡}.

Implements:
- `omega`: Ω_{d,𝔡} = {σ ∈ C_{t0} : σd ∈ R_{t0}𝔡S_{α|β}}.
- `a_coeff`: a_{d,𝔡} = Σ_{σ ∈ Ω} sgn(σ)ε_𝔡(σd), summed over all of C_{t0}.
- `a_coeff_orbit`: The same number from one σ per coset of the stabilizer.
- `stab_column_order`: |C_{t0} ∩ dS_{α|β}d^{-1}|.
- `require_R`: Guard for operations defined only on ℛ.
"""

import itertools
import logging
from collections.abc import Iterator

from sympy.utilities.iterables import multiset_permutations

from specht_hom.exceptions import NotInRError
from specht_hom.group import Permutation, column_stabilizer, coset_tableau, epsilon
from specht_hom.hom.predicates import in_C, in_R
from specht_hom.tableaux import (
    Bicomposition,
    ColorTableau,
    NumericTableau,
    palette,
    stabilizer_order,
)

coeff_logger = logging.getLogger(__name__)


def require_R(rep: Permutation, t0: NumericTableau, ab: Bicomposition) -> None:
    """Raise `NotInRError` unless 𝔡 ∈ ℛ."""
    if not in_R(rep, t0, ab):
        raise NotInRError(f"{rep} ∉ ℛ for t0 = {t0}, (α|β) = ({ab})")


def stab_column_order(d: Permutation, t0: NumericTableau, ab: Bicomposition) -> int:
    """|stab_{C_{t0}}(T_d)| = |C_{t0} ∩ dS_{α|β}d^{-1}|."""
    return stabilizer_order(coset_tableau(d, t0, ab))


def omega(
    d: Permutation, rep: Permutation, t0: NumericTableau, ab: Bicomposition
) -> list[Permutation]:
    """Ω_{d,𝔡}, sorted by one-line notation."""
    target = coset_tableau(rep, t0, ab).row_contents()
    return sorted(
        sigma
        for sigma in column_stabilizer(t0)
        if coset_tableau(sigma * d, t0, ab).row_contents() == target
    )


def a_coeff(
    d: Permutation, rep: Permutation, t0: NumericTableau, ab: Bicomposition
) -> int:
    """a_{d,𝔡} by brute force over C_{t0}.

    Raises:
        NotInRError: If 𝔡 ∉ ℛ.
    """
    require_R(rep, t0, ab)
    return sum(
        sigma.sign * epsilon(sigma * d, rep, t0, ab) for sigma in omega(d, rep, t0, ab)
    )


def _orbit_representatives(
    td: ColorTableau, t0: NumericTableau
) -> Iterator[Permutation]:
    """One σ ∈ C_{t0} for every tableau σ·T_d of the C_{t0}-orbit of T_d.

    With g the column-preserving cell map such that σ·T_d = T_d∘g, σ is
    t0∘g^{-1}∘t0^{-1}.
    """
    code = {color: k for k, color in enumerate(palette(td.type))}
    per_column: list[list[tuple[int, ...]]] = []
    for col in td.columns():
        options = []
        for arrangement in multiset_permutations([code[c] for c in col]):
            free = list(range(len(col)))
            g = []
            for k in arrangement:
                r = next(r for r in free if code[col[r]] == k)
                free.remove(r)
                g.append(r)
            options.append(tuple(g))
        per_column.append(options)
    for choice in itertools.product(*per_column):
        images = list(range(1, t0.n + 1))
        for j, g in enumerate(choice, 1):
            for i, r in enumerate(g, 1):
                images[t0[(r + 1, j)] - 1] = t0[(i, j)]
        yield Permutation(tuple(images))


def a_coeff_orbit(
    d: Permutation, rep: Permutation, t0: NumericTableau, ab: Bicomposition
) -> int:
    """a_{d,𝔡} as |C_{t0} ∩ dS_{α|β}d^{-1}|·Σ_i sgn(σ_i)ε_𝔡(σ_i d).

    σ_i runs over one element per left coset of the stabilizer inside Ω_{d,𝔡},
    found by walking the C_{t0}-orbit of T_d. Zero when d ∉ 𝒞.

    Raises:
        NotInRError: If 𝔡 ∉ ℛ.
    """
    require_R(rep, t0, ab)
    if not in_C(d, t0, ab):
        return 0
    td = coset_tableau(d, t0, ab)
    target = coset_tableau(rep, t0, ab).row_contents()
    total = 0
    for sigma in _orbit_representatives(td, t0):
        moved = sigma * d
        if coset_tableau(moved, t0, ab).row_contents() == target:
            total += sigma.sign * epsilon(moved, rep, t0, ab)
    value = stabilizer_order(td) * total
    coeff_logger.debug("a(%s, %s) = %d", d, rep, value)
    return value
