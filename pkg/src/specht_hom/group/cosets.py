"""Row double cosets R_{t0}·𝔡·S_{α|β} and the sign ε_𝔡.

Implements:
- `in_row_double_coset`: Membership test through row colour contents.
- `row_double_coset`: The double coset by enumeration (small n only).
- `row_factor`: An explicit τ ∈ R_{t0} with τ^{-1}ω ∈ 𝔡S_{α|β}.
- `epsilon`: ε_𝔡(ω) = sgn(ξ_β) for any factorization ω = τ𝔡ξ_αξ_β^{+|α|}.
"""

import logging

from specht_hom.exceptions import NotInDoubleCosetError, NotInRError
from specht_hom.group.perm import Permutation
from specht_hom.group.young import (
    YoungSubgroupSpec,
    coset_tableau,
    row_stabilizer,
    young_subgroup,
)
from specht_hom.tableaux import (
    Bicomposition,
    ColorTableau,
    NumericTableau,
    rows_repeat_only_unsigned,
)

coset_logger = logging.getLogger(__name__)


def in_row_double_coset(
    omega: Permutation, rep: Permutation, t0: NumericTableau, ab: Bicomposition
) -> bool:
    """Whether ω ∈ R_{t0}·𝔡·S_{α|β}.

    R_{t0} permutes cells within rows and S_{α|β} fixes T_0, so the test is
    row-by-row equality of the colour multisets of T_ω and T_𝔡.
    """
    return (
        coset_tableau(omega, t0, ab).row_contents()
        == coset_tableau(rep, t0, ab).row_contents()
    )


def row_double_coset(
    rep: Permutation, t0: NumericTableau, ab: Bicomposition
) -> set[Permutation]:
    """R_{t0}·𝔡·S_{α|β} listed element by element."""
    subgroup = list(young_subgroup(ab))
    return {tau * rep * xi for tau in row_stabilizer(t0) for xi in subgroup}


def _row_matching(
    source: ColorTableau, target: ColorTableau, t0: NumericTableau
) -> Permutation:
    """τ^{-1} ∈ R_{t0} with τ^{-1}(t0(c)) = t0(f(c)) and source(c) = target(f(c)).

    Cells of equal colour are matched row by row, left to right.
    """
    images = [0] * t0.n
    for i, (src_row, tgt_row) in enumerate(zip(source.rows, target.rows), 1):
        free = list(range(len(tgt_row)))
        for j, color in enumerate(src_row):
            k = next(k for k in free if tgt_row[k] == color)
            free.remove(k)
            images[t0[(i, j + 1)] - 1] = t0[(i, k + 1)]
    return Permutation(tuple(images))


def row_factor(
    omega: Permutation, rep: Permutation, t0: NumericTableau, ab: Bicomposition
) -> Permutation:
    """τ ∈ R_{t0} with τ^{-1}ω ∈ 𝔡·S_{α|β}.

    Raises:
        NotInDoubleCosetError: If ω ∉ R_{t0}·𝔡·S_{α|β}.
    """
    source = coset_tableau(omega, t0, ab)
    target = coset_tableau(rep, t0, ab)
    if source.row_contents() != target.row_contents():
        raise NotInDoubleCosetError(f"{omega} ∉ R_t0·{rep}·S_({ab})")
    return _row_matching(source, target, t0).inverse()


def epsilon(
    omega: Permutation, rep: Permutation, t0: NumericTableau, ab: Bicomposition
) -> int:
    """ε_𝔡(ω) = sgn(ξ_β) where ω = τ·𝔡·ξ_α·ξ_β^{+|α|}.

    Args:
        omega (Permutation): An element of R_{t0}·𝔡·S_{α|β}.
        rep (Permutation): 𝔡, which must lie in ℛ.
        t0 (NumericTableau): The fixed tableau t_0.
        ab (Bicomposition): The type (α|β).

    Returns:
        +1 or -1. Independent of the factorization because 𝔡 ∈ ℛ.

    Raises:
        NotInRError: If 𝔡 ∉ ℛ.
        NotInDoubleCosetError: If ω is not in the double coset.
    """
    target = coset_tableau(rep, t0, ab)
    if not rows_repeat_only_unsigned(target):
        raise NotInRError(f"{rep} ∉ ℛ for t0 = {t0}, (α|β) = ({ab})")
    source = coset_tableau(omega, t0, ab)
    if source.row_contents() != target.row_contents():
        raise NotInDoubleCosetError(f"{omega} ∉ R_t0·{rep}·S_({ab})")
    tau_inverse = _row_matching(source, target, t0)
    xi = rep.inverse() * tau_inverse * omega
    spec = YoungSubgroupSpec.from_bicomposition(ab)
    if not spec.contains(xi):
        # unreachable when the matching is correct
        raise NotInDoubleCosetError(f"Matching for {omega} left S_({ab})")
    return spec.signed_sign(xi)
