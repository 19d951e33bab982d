"""Helpers shared by the worked-example and property checks.

Implements:
- `sweep`: Every (λ, (α|β)) with 1 ≤ n ≤ max_n as default instances.
- `rng_for`: A check-specific random generator.
- `matrices_equal`: Exact integer matrix comparison.
- `equivariance_failures`: The intertwining identity for every θ̂_𝔡, 𝔡 ∈ Γ_sstd.
- `stacked_sstd`: The rows of all θ̂_𝔡, 𝔡 ∈ Γ_sstd, stacked.
"""

import random
from collections.abc import Iterator, Sequence

from sympy.polys.matrices import DomainMatrix

from specht_hom.hom import gamma_sstd, theta_sstd
from specht_hom.linalg import exact_matrix, stack_rows
from specht_hom.signed import action_matrices
from specht_hom.specht import specht_generator_matrices
from specht_hom.suite.instances import Instance
from specht_hom.tableaux import enumerate_bicompositions, enumerate_partitions


def sweep(max_n: int, min_n: int = 1) -> Iterator[Instance]:
    """Default instances for all λ ⊢ n and all bicompositions of n."""
    for n in range(min_n, max_n + 1):
        for shape in enumerate_partitions(n):
            for ab in enumerate_bicompositions(n):
                yield Instance.default(shape, ab)


def rng_for(seed: int, check: str) -> random.Random:
    """A generator seeded by the run seed and the check name."""
    return random.Random(f"{seed}:{check}")


def matrices_equal(first: DomainMatrix, second: DomainMatrix) -> bool:
    """Entrywise equality of integer matrices of equal shape."""
    return first.shape == second.shape and first.to_list() == second.to_list()


def equivariance_failures(instance: Instance) -> tuple[list[str], int]:
    """Check M(s_k)·Θᵀ = Θᵀ·S(s_k) for every θ̂_𝔡, 𝔡 ∈ Γ_sstd, and every k.

    Returns:
        The failing (𝔡, k) pairs and the number of pairs checked.
    """
    failures: list[str] = []
    total = 0
    specht = [exact_matrix(m) for m in specht_generator_matrices(instance.shape)]
    signed = [exact_matrix(m) for m in action_matrices(instance.type)]
    for hom in theta_sstd(instance.type, instance.t0):
        theta_t = exact_matrix(hom.entries).transpose()
        for k, (s_k, m_k) in enumerate(zip(specht, signed), 1):
            total += 1
            if not matrices_equal(m_k * theta_t, theta_t * s_k):
                failures.append(f"{instance} 𝔡 = {hom.rep} s_{k}")
    return failures, total


def stacked_sstd(instance: Instance) -> tuple[list[list[int]], int]:
    """All rows of Θ_sstd stacked, and |Γ_sstd|."""
    homs = theta_sstd(instance.type, instance.t0)
    size = len(gamma_sstd(instance.type, instance.t0))
    return stack_rows(*(h.entries for h in homs)), size
