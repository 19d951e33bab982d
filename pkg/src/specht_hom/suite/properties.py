"""Exhaustive and sampled property checks.

Implements:
- `PROPERTY_CHECKS`: Check name → check function.
"""

import itertools
import logging
import random
import time
from collections.abc import Callable
from functools import cache, partial

from specht_hom.group import (
    Permutation,
    YoungSubgroupSpec,
    column_stabilizer,
    coset_decompose,
    coset_tableau,
    distinguished_transversal,
    epsilon,
    in_row_double_coset,
    random_column_element,
    random_row_element,
    random_transversal,
    random_young_element,
    rho,
    row_double_coset,
    row_stabilizer,
)
from specht_hom.hom import (
    ThetaMethod,
    a_coeff,
    a_coeff_orbit,
    a_table,
    gamma_sstd,
    in_C,
    in_C_by_group,
    in_R,
    in_R_by_group,
    li_condition,
    omega,
    preorder,
    stab_column_order,
    tableau_preorder,
    theta_matrix,
    theta_on_transversal,
    transversal_to_distinguished,
    vartheta,
)
from specht_hom.linalg import (
    FieldSpec,
    exact_matrix,
    hom_dim_oracle,
    rank,
    rank_bareiss,
    rank_gauss,
)
from specht_hom.signed import act_basis, action_matrices, signed_action_matrix
from specht_hom.specht import (
    TabloidVector,
    act_on_tableau,
    garnir_specs,
    garnir_sum,
    polytabloid_expansion,
    specht_generator_matrices,
    straighten,
    straightener,
)
from specht_hom.suite.common import (
    equivariance_failures,
    matrices_equal,
    rng_for,
    stacked_sstd,
    sweep,
)
from specht_hom.suite.config import SuiteBounds
from specht_hom.suite.instances import Instance
from specht_hom.suite.report import CheckResult, tally
from specht_hom.tableaux import (
    Bicomposition,
    Composition,
    NumericTableau,
    Partition,
    count_standard,
    enumerate_bicompositions,
    enumerate_partitions,
    enumerate_semistandard,
    enumerate_standard_tableaux,
    initial_tableau,
    is_p_core,
)

properties_logger = logging.getLogger(__name__)

SMALL_PRIMES = (2, 3, 5)


@cache
def _sstd_count(shape: Partition, ab: Bicomposition) -> int:
    return len(enumerate_semistandard(shape, ab))


def _identity_matrix(size: int) -> list[list[int]]:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def _with_sstd(max_n: int, min_n: int = 1) -> list[Instance]:
    return [inst for inst in sweep(max_n, min_n) if gamma_sstd(inst.type, inst.t0)]


def _sampled_instances(
    bounds: SuiteBounds, check: str, per_shape: int = 2
) -> list[Instance]:
    """Up to `per_shape` random types with Γ_sstd ≠ ∅ per λ ⊢ n, 2 ≤ n ≤ max_n."""
    rng = rng_for(bounds.seed, check)
    out = []
    for n in range(2, bounds.max_n + 1):
        for shape in enumerate_partitions(n):
            types = [
                ab for ab in enumerate_bicompositions(n) if _sstd_count(shape, ab)
            ]
            for ab in rng.sample(types, min(per_shape, len(types))):
                out.append(Instance.default(shape, ab))
    return out


def counting_identities(bounds: SuiteBounds) -> list[CheckResult]:
    """Dimension, conjugation, rearrangement and concatenation identities."""
    out = []
    for n in range(0, bounds.count_max_n + 1):
        started = time.perf_counter()
        shapes = enumerate_partitions(n)
        failures: list[str] = []
        total = 0
        for ab in enumerate_bicompositions(n):
            total += 1
            dim = sum(count_standard(s) * _sstd_count(s, ab) for s in shapes)
            if dim != ab.index():
                failures.append(f"dimension ({ab}): {dim} ≠ {ab.index()}")
            rearranged = Bicomposition(
                Composition(tuple(sorted(ab.alpha.parts))),
                Composition(tuple(sorted(ab.beta.parts, reverse=True))),
            )
            for shape in shapes:
                count = _sstd_count(shape, ab)
                total += 2
                if count != _sstd_count(shape.conjugate(), ab.swap()):
                    failures.append(f"conjugation ({shape})/({ab})")
                if count != _sstd_count(shape, rearranged):
                    failures.append(f"rearrangement ({shape})/({ab})")
        for m in (1, 2):
            ones = Composition((1,) * m)
            for ab in enumerate_bicompositions(n - m) if n >= m else []:
                left = Bicomposition(ab.alpha.concat(ones), ab.beta)
                right = Bicomposition(ab.alpha, ab.beta.concat(ones))
                for shape in shapes:
                    total += 1
                    if _sstd_count(shape, left) != _sstd_count(shape, right):
                        failures.append(f"concatenation m = {m} ({shape})/({ab})")
        out.append(tally("counting identities", f"n = {n}", failures, total, started))
    return out


def standard_counts(bounds: SuiteBounds) -> list[CheckResult]:
    """Enumerated standard tableaux against the hook length formula."""
    started = time.perf_counter()
    failures = []
    total = 0
    for n in range(0, bounds.count_max_n + 1):
        for shape in enumerate_partitions(n):
            total += 1
            found = len(enumerate_standard_tableaux(shape))
            if found != count_standard(shape):
                failures.append(f"({shape}): {found} ≠ {count_standard(shape)}")
    scope = f"n ≤ {bounds.count_max_n}"
    return [tally("hook length formula", scope, failures, total, started)]


def _consistent(t: NumericTableau) -> bool:
    engine = straightener(t.shape)
    combined = TabloidVector.combine(
        (c, polytabloid_expansion(s))
        for c, s in zip(straighten(t).coords, engine.basis)
        if c
    )
    return combined.terms == polytabloid_expansion(t).terms


def straightening_consistency(bounds: SuiteBounds) -> list[CheckResult]:
    """Σ_s straighten(t)[s]·e_s = e_t; exhaustive up to max_n, sampled at 6 and 7."""
    out = []
    rng = rng_for(bounds.seed, "straightening_consistency")
    for n in range(1, bounds.max_n + 1):
        started = time.perf_counter()
        failures = []
        total = 0
        for shape in enumerate_partitions(n):
            t0 = initial_tableau(shape)
            for images in itertools.permutations(range(1, n + 1)):
                total += 1
                t = t0.relabel(Permutation(images))
                if not _consistent(t):
                    failures.append(str(t))
        out.append(tally("straightening", f"n = {n}", failures, total, started))
    for n in (6, 7):
        started = time.perf_counter()
        failures = []
        total = 0
        for shape in enumerate_partitions(n):
            t0 = initial_tableau(shape)
            for _ in range(bounds.samples):
                total += 1
                t = t0.relabel(Permutation.random(n, rng))
                if not _consistent(t):
                    failures.append(str(t))
        out.append(
            tally("straightening", f"n = {n} sampled", failures, total, started)
        )
    return out


def specht_relations(bounds: SuiteBounds) -> list[CheckResult]:
    """s_k² = 1, the braid and commuting relations, and dim S^λ = f^λ."""
    out = []
    for n in range(1, bounds.max_n + 1):
        started = time.perf_counter()
        failures = []
        total = 0
        for shape in enumerate_partitions(n):
            f = count_standard(shape)
            gens = [exact_matrix(m) for m in specht_generator_matrices(shape)]
            identity = exact_matrix(_identity_matrix(f))
            total += 1
            if straightener(shape).dim != f:
                failures.append(f"({shape}): dim")
            for k, s_k in enumerate(gens):
                total += 1
                if not matrices_equal(s_k * s_k, identity):
                    failures.append(f"({shape}): s_{k + 1}² ≠ 1")
                for j, s_j in enumerate(gens[k + 1 :], k + 1):
                    total += 1
                    if j == k + 1:
                        holds = matrices_equal(s_k * s_j * s_k, s_j * s_k * s_j)
                    else:
                        holds = matrices_equal(s_k * s_j, s_j * s_k)
                    if not holds:
                        failures.append(f"({shape}): s_{k + 1}, s_{j + 1}")
        out.append(tally("Specht relations", f"n = {n}", failures, total, started))
    return out


def garnir_vanishing(bounds: SuiteBounds) -> list[CheckResult]:
    """Σ_γ sgn(γ) e_{γt} = 0 as tabloids and after straightening."""
    rng = rng_for(bounds.seed, "garnir_vanishing")
    started = time.perf_counter()
    failures = []
    total = 0
    for n in range(2, bounds.max_n + 1):
        for shape in enumerate_partitions(n):
            specs = garnir_specs(shape)
            if not specs:
                continue
            t0 = initial_tableau(shape)
            for _ in range(max(1, bounds.samples // 10)):
                t = t0.relabel(Permutation.random(n, rng))
                spec = rng.choice(specs)
                terms = garnir_sum(t, spec)
                total += 1
                tabloids = TabloidVector.combine(
                    (sign, polytabloid_expansion(u)) for sign, u in terms
                )
                coords = [0] * straightener(shape).dim
                for sign, u in terms:
                    for k, c in enumerate(straighten(u).coords):
                        coords[k] += sign * c
                if not tabloids.is_zero() or any(coords):
                    failures.append(f"{t} {spec}")
    scope = f"n ≤ {bounds.max_n}"
    return [tally("Garnir vanishing", scope, failures, total, started)]


def signed_action(bounds: SuiteBounds) -> list[CheckResult]:
    """The signed action is a homomorphism, swapping keeps |Γ|, and (∅|(n)) is sgn."""
    rng = rng_for(bounds.seed, "signed_action")
    out = []
    started = time.perf_counter()
    failures = []
    pairs = max(1, bounds.trials // 2)
    for _ in range(pairs):
        n = rng.randint(2, 7)
        ab = rng.choice(enumerate_bicompositions(n))
        sigma, tau = Permutation.random(n, rng), Permutation.random(n, rng)
        product = exact_matrix(signed_action_matrix(ab, sigma)) * exact_matrix(
            signed_action_matrix(ab, tau)
        )
        composed = exact_matrix(signed_action_matrix(ab, sigma * tau))
        if not matrices_equal(product, composed):
            failures.append(f"({ab}) σ = {sigma}, τ = {tau}")
    out.append(tally("action homomorphism", "n ≤ 7", failures, pairs, started))

    started = time.perf_counter()
    failures = []
    total = 0
    for n in range(1, bounds.max_n + 1):
        for ab in enumerate_bicompositions(n):
            total += 1
            size = len(distinguished_transversal(ab))
            if size != len(distinguished_transversal(ab.swap())):
                failures.append(f"|Γ({ab})| ≠ |Γ({ab.swap()})|")
            identity = exact_matrix(_identity_matrix(size))
            for k, m_k in enumerate(action_matrices(ab), 1):
                total += 1
                generator = exact_matrix(m_k)
                if not matrices_equal(generator * generator, identity):
                    failures.append(f"({ab}) s_{k}² ≠ 1")
        sign_type = Bicomposition(Composition(), Composition((n,)))
        unit = Permutation.identity(n)
        for images in itertools.permutations(range(1, n + 1)):
            sigma = Permutation(images)
            total += 1
            if act_basis(sigma, unit, sign_type) != (sigma.sign, unit):
                failures.append(f"(|{n}) σ = {sigma}")
    scope = f"n ≤ {bounds.max_n}"
    out.append(tally("signed module", scope, failures, total, started))
    return out


def equivariance_sweep(bounds: SuiteBounds) -> list[CheckResult]:
    """M(s_k)·Θᵀ = Θᵀ·S(s_k) for 𝔡 ∈ Γ_sstd, every λ ⊢ n ≤ max_n and every type."""
    out = []
    for n in range(2, bounds.max_n + 1):
        started = time.perf_counter()
        failures: list[str] = []
        total = 0
        for instance in sweep(n, n):
            found, checked = equivariance_failures(instance)
            failures.extend(found)
            total += checked
        out.append(tally("equivariance", f"n = {n}", failures, total, started))
    return out


def column_garnir_vanishing(bounds: SuiteBounds) -> list[CheckResult]:
    """ϑ_𝔡(π·t) = sgn(π)ϑ_𝔡(t) for π ∈ C_t, and ϑ_𝔡 kills Garnir sums."""
    rng = rng_for(bounds.seed, "column_garnir_vanishing")
    started = time.perf_counter()
    failures = []
    total = 0
    for instance in _sampled_instances(bounds, "column_garnir_vanishing"):
        t0, ab = instance.t0, instance.type
        rep = gamma_sstd(ab, t0)[0]
        theta = partial(vartheta, rep=rep, t0=t0, ab=ab, table=a_table(rep, t0, ab))
        specs = garnir_specs(instance.shape)
        for _ in range(bounds.samples):
            t = t0.relabel(Permutation.random(ab.n, rng))
            pi = random_column_element(t, rng)
            total += 1
            base = theta(t)
            if theta(act_on_tableau(pi, t)) != tuple(pi.sign * v for v in base):
                failures.append(f"{instance} t = {t} π = {pi}")
            if not specs:
                continue
            spec = rng.choice(specs)
            total += 1
            summed = [0] * len(base)
            for sign, u in garnir_sum(t, spec):
                for k, v in enumerate(theta(u)):
                    summed[k] += sign * v
            if any(summed):
                failures.append(f"{instance} t = {t} {spec}")
    scope = f"n ≤ {bounds.max_n}"
    return [tally("ϑ column and Garnir", scope, failures, total, started)]


def semisimple_basis(bounds: SuiteBounds) -> list[CheckResult]:
    """rank_Q Θ_sstd = |sstd| = dim_Q Hom for λ ⊢ n ≤ max_n and every type."""
    out = []
    rationals = FieldSpec.rationals()
    for n in range(1, bounds.max_n + 1):
        started = time.perf_counter()
        failures = []
        total = 0
        for instance in sweep(n, n):
            shape, ab = instance.shape, instance.type
            if ab.index() > bounds.hom_bound:
                properties_logger.warning("Skipping %s: |Γ| above bound", instance)
                continue
            total += 1
            rows, size = stacked_sstd(instance)
            count = _sstd_count(shape, ab)
            dim = hom_dim_oracle(shape, ab, rationals, bounds.hom_bound)
            found = rank(rows, rationals)
            if not found == size == count == dim:
                failures.append(
                    f"{instance}: rank {found}, |Γ_sstd| {size}, |sstd| {count}, "
                    f"dim {dim}"
                )
        out.append(tally("semisimple basis", f"n = {n}", failures, total, started))
    return out


def stabilizer_diagonal(bounds: SuiteBounds) -> list[CheckResult]:
    """a_{𝔡,𝔡} = |stab_{C_{t0}}(T_𝔡)| for every semistandard 𝔡."""
    out = []
    for n in range(1, bounds.stab_max_n + 1):
        started = time.perf_counter()
        failures = []
        total = 0
        for instance in sweep(n, n):
            t0, ab = instance.t0, instance.type
            for rep in gamma_sstd(ab, t0):
                total += 1
                value = a_coeff_orbit(rep, rep, t0, ab)
                if value != stab_column_order(rep, t0, ab):
                    failures.append(f"{instance} 𝔡 = {rep}: {value}")
        out.append(tally("a(𝔡,𝔡) = |stab|", f"n = {n}", failures, total, started))
    return out


def independence_mod_p(bounds: SuiteBounds) -> list[CheckResult]:
    """rank_{F_p} Θ_sstd = |Γ_sstd| under the column condition; = dim Hom on p-cores."""
    started = time.perf_counter()
    failures = []
    total = 0
    for instance in _with_sstd(bounds.max_n):
        shape, ab = instance.shape, instance.type
        rows, size = stacked_sstd(instance)
        for p in SMALL_PRIMES:
            if not li_condition(shape, ab, p):
                continue
            field = FieldSpec.prime(p)
            total += 1
            found = rank(rows, field)
            if found != size:
                failures.append(f"{instance} p = {p}: rank {found} ≠ {size}")
            if is_p_core(shape, p) and ab.index() <= bounds.hom_bound:
                total += 1
                dim = hom_dim_oracle(shape, ab, field, bounds.hom_bound)
                if dim != size:
                    failures.append(f"{instance} p = {p}: p-core dim {dim} ≠ {size}")
    scope = f"n ≤ {bounds.max_n}"
    return [tally("independence mod p", scope, failures, total, started)]


def _row_weakly_increasing(instance: Instance, d: Permutation) -> bool:
    return all(
        list(row) == sorted(row)
        for row in coset_tableau(d, instance.t0, instance.type).rows
    )


def _membership_failures(instance: Instance) -> tuple[list[str], int]:
    """ℛ and 𝒞 against their definitions, ∼ against C_{t0}-orbits."""
    t0, ab = instance.t0, instance.type
    gamma = list(distinguished_transversal(ab))
    columns = list(column_stabilizer(t0))
    failures = []
    total = 0
    for d in gamma:
        total += 2
        if in_R(d, t0, ab) != in_R_by_group(d, t0, ab):
            failures.append(f"{instance} ℛ at {d}")
        if in_C(d, t0, ab) != in_C_by_group(d, t0, ab):
            failures.append(f"{instance} 𝒞 at {d}")
        orbit = {coset_decompose(sigma * d, ab).rep for sigma in columns}
        for other in gamma:
            total += 1
            if preorder(d, other, t0, ab).equivalent != (other in orbit):
                failures.append(f"{instance} ∼ at {d}, {other}")
    return failures, total


def _brute_failures(instance: Instance) -> tuple[list[str], int]:
    """Row moves raise T_d, a vanishes on d ∉ 𝒞, |Ω| is a union of cosets."""
    t0, ab = instance.t0, instance.type
    gamma = list(distinguished_transversal(ab))
    rows = list(row_stabilizer(t0))
    failures = []
    total = 0
    for d in gamma:
        if _row_weakly_increasing(instance, d):
            td = coset_tableau(d, t0, ab)
            for tau in rows:
                total += 1
                moved = coset_tableau(tau * d, t0, ab)
                if moved != td and not tableau_preorder(moved, td).greater:
                    failures.append(f"{instance} row move of {d} by {tau}")
    for rep in gamma_sstd(ab, t0):
        for d in gamma:
            total += 2
            if not in_C(d, t0, ab) and a_coeff(d, rep, t0, ab):
                failures.append(f"{instance} a({d}, {rep}) ≠ 0 for d ∉ 𝒞")
            size = len(omega(d, rep, t0, ab))
            if size % stab_column_order(d, t0, ab):
                failures.append(f"{instance} |Ω({d}, {rep})| = {size}")
    return failures, total


def structural(bounds: SuiteBounds) -> list[CheckResult]:
    """ℛ and 𝒞 against their definitions, the pre-order, vanishing of a, and |Ω|.

    The brute-force sweep over R_{t0} and Ω stops at `brute_max_n`.
    """
    out = []
    small = min(bounds.max_n, bounds.brute_max_n)
    for name, check, top in (
        ("ℛ, 𝒞 and ∼", _membership_failures, bounds.max_n),
        ("row moves, d ∉ 𝒞 and Ω", _brute_failures, small),
    ):
        for n in range(1, top + 1):
            started = time.perf_counter()
            failures: list[str] = []
            total = 0
            for instance in sweep(n, n):
                found, checked = check(instance)
                failures.extend(found)
                total += checked
            out.append(tally(name, f"n = {n}", failures, total, started))

    started = time.perf_counter()
    failures = []
    total = 0
    for instance in _with_sstd(bounds.max_n):
        t0, ab = instance.t0, instance.type
        for rep in gamma_sstd(ab, t0):
            total += 1
            if not (in_R(rep, t0, ab) and in_C(rep, t0, ab)):
                failures.append(f"{instance} 𝔡 = {rep} ∉ ℛ ∩ 𝒞")
            table = a_table(rep, t0, ab)
            for d, value in zip(distinguished_transversal(ab), table):
                total += 1
                if value and not preorder(d, rep, t0, ab).geq:
                    failures.append(f"{instance} a({d}, {rep}) ≠ 0 but d ⋭ 𝔡")
    out.append(
        tally(
            "Γ_sstd ⊆ ℛ ∩ 𝒞 and a ≠ 0 ⇒ ⊵",
            f"n ≤ {bounds.max_n}",
            failures,
            total,
            started,
        )
    )
    return out


def sign_equivariance(bounds: SuiteBounds) -> list[CheckResult]:
    """a_{σdη,τ𝔡ξ} = sgn(σ)sgn(ξ_β)sgn(η_β)a_{d,𝔡} on random data."""
    rng = rng_for(bounds.seed, "sign_equivariance")
    started = time.perf_counter()
    candidates = _with_sstd(min(bounds.max_n + 1, 6), 2)
    failures = []
    for _ in range(bounds.trials):
        instance = rng.choice(candidates)
        t0, ab = instance.t0, instance.type
        spec = YoungSubgroupSpec.from_bicomposition(ab)
        rep = rng.choice(gamma_sstd(ab, t0))
        d = Permutation.random(ab.n, rng)
        tau, sigma = random_row_element(t0, rng), random_column_element(t0, rng)
        xi, eta = random_young_element(ab, rng), random_young_element(ab, rng)
        expected = sigma.sign * spec.signed_sign(xi) * spec.signed_sign(eta)
        expected *= a_coeff_orbit(d, rep, t0, ab)
        computed = a_coeff_orbit(sigma * d * eta, tau * rep * xi, t0, ab)
        if computed != expected:
            failures.append(f"{instance} d = {d}, 𝔡 = {rep}: {computed} ≠ {expected}")
    return [tally("sign equivariance of a", "n ≤ 6", failures, bounds.trials, started)]


def coefficient_agreement(bounds: SuiteBounds) -> list[CheckResult]:
    """a_coeff = a_coeff_orbit for every d ∈ Γ and every 𝔡 ∈ Γ ∩ ℛ."""
    out = []
    for n in range(1, bounds.max_n + 1):
        started = time.perf_counter()
        failures = []
        total = 0
        for instance in sweep(n, n):
            t0, ab = instance.t0, instance.type
            gamma = list(distinguished_transversal(ab))
            for rep in (r for r in gamma if in_R(r, t0, ab)):
                for d in gamma:
                    total += 1
                    brute = a_coeff(d, rep, t0, ab)
                    if brute != a_coeff_orbit(d, rep, t0, ab):
                        failures.append(f"{instance} a({d}, {rep}) = {brute}")
        out.append(
            tally("a_coeff = a_coeff_orbit", f"n = {n}", failures, total, started)
        )
    return out


def theta_methods(bounds: SuiteBounds) -> list[CheckResult]:
    """The table and direct constructions of θ̂_𝔡 agree."""
    started = time.perf_counter()
    failures = []
    total = 0
    for instance in _with_sstd(bounds.max_n):
        t0, ab = instance.t0, instance.type
        for rep in gamma_sstd(ab, t0):
            total += 1
            table = theta_matrix(rep, t0, ab, ThetaMethod.TABLE)
            if table != theta_matrix(rep, t0, ab, ThetaMethod.DIRECT):
                failures.append(f"{instance} 𝔡 = {rep}")
    scope = f"n ≤ {bounds.max_n}"
    return [tally("table = direct", scope, failures, total, started)]


def _transversal_failures(
    instance: Instance, rng: random.Random
) -> tuple[list[str], int]:
    t0, ab = instance.t0, instance.type
    reps = gamma_sstd(ab, t0)
    homs = [theta_matrix(rep, t0, ab) for rep in reps]
    failures = []
    total = 0
    for _ in range(3):
        transversal, _ = random_transversal(ab, rng)
        for rep, hom in zip(reps, homs):
            total += 1
            rows = theta_on_transversal(rep, t0, ab, transversal)
            if transversal_to_distinguished(rows, transversal, ab) != hom.entries:
                failures.append(f"{instance} 𝔡 = {rep}")
    return failures, total


def _t0_failures(instance: Instance, rng: random.Random) -> tuple[list[str], int]:
    t0, ab = instance.t0, instance.type
    reps = gamma_sstd(ab, t0)
    homs = [theta_matrix(rep, t0, ab) for rep in reps]
    failures = []
    total = 0
    for _ in range(3):
        other = t0.relabel(Permutation.random(ab.n, rng))
        pi = rho(other, t0)
        other_reps = set(gamma_sstd(ab, other))
        total += 1
        if len(other_reps) != len(reps):
            failures.append(f"{instance} t0' = {other}: |Γ_sstd| changed")
        for rep, hom in zip(reps, homs):
            total += 2
            moved = pi * rep
            if theta_matrix(moved, other, ab).entries != hom.entries:
                failures.append(f"{instance} t0' = {other} 𝔡 = {rep}")
            minimal, _, xi_beta = coset_decompose(moved, ab)
            flipped = tuple(
                tuple(xi_beta.sign * v for v in row)
                for row in theta_matrix(minimal, other, ab).entries
            )
            if minimal not in other_reps or flipped != hom.entries:
                failures.append(f"{instance} t0' = {other} Γ-rep of {moved}")
    return failures, total


def invariance(bounds: SuiteBounds) -> list[CheckResult]:
    """θ̂_𝔡 is independent of the transversal and, after relabelling, of t_0."""
    rng = rng_for(bounds.seed, "invariance")
    instances = _sampled_instances(bounds, "invariance")
    scope = f"n ≤ {bounds.max_n}"
    out = []
    for name, check in (
        ("transversal independence", _transversal_failures),
        ("t0 independence", _t0_failures),
    ):
        started = time.perf_counter()
        failures: list[str] = []
        total = 0
        for instance in instances:
            found, checked = check(instance, rng)
            failures.extend(found)
            total += checked
        out.append(tally(name, scope, failures, total, started))
    return out


def double_coset_membership(bounds: SuiteBounds) -> list[CheckResult]:
    """Row-content membership against R_{t0}·𝔡·S_{α|β} listed element by element."""
    out = []
    for n in range(1, bounds.max_n + 1):
        started = time.perf_counter()
        everything = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
        failures = []
        total = 0
        for instance in sweep(n, n):
            t0, ab = instance.t0, instance.type
            for rep in distinguished_transversal(ab):
                members = row_double_coset(rep, t0, ab)
                for w in everything:
                    total += 1
                    if (w in members) != in_row_double_coset(w, rep, t0, ab):
                        failures.append(f"{instance} ω = {w}, 𝔡 = {rep}")
        out.append(tally("row double cosets", f"n = {n}", failures, total, started))
    return out


def _factorization_signs(
    w: Permutation, rep: Permutation, instance: Instance
) -> list[int]:
    """sgn(ξ_β) over every factorization ω = τ·𝔡·ξ with τ ∈ R_{t0}."""
    spec = YoungSubgroupSpec.from_bicomposition(instance.type)
    signs = []
    for tau in row_stabilizer(instance.t0):
        xi = rep.inverse() * tau.inverse() * w
        if spec.contains(xi):
            signs.append(spec.signed_sign(xi))
    return signs


def epsilon_factorizations(bounds: SuiteBounds) -> list[CheckResult]:
    """ε_𝔡(ω) agrees with sgn(ξ_β) of up to 50 random factorizations of ω."""
    rng = rng_for(bounds.seed, "epsilon_factorizations")
    started = time.perf_counter()
    top = min(bounds.max_n + 1, 6)
    candidates = list(sweep(top, 2))
    failures = []
    total = 0
    while candidates and total < bounds.trials:
        instance = rng.choice(candidates)
        t0, ab = instance.t0, instance.type
        reps = [d for d in distinguished_transversal(ab) if in_R(d, t0, ab)]
        if not reps:
            continue
        rep = rng.choice(reps)
        w = random_row_element(t0, rng) * rep * random_young_element(ab, rng)
        signs = _factorization_signs(w, rep, instance)
        value = epsilon(w, rep, t0, ab)
        sampled = rng.sample(signs, min(50, len(signs)))
        total += 1
        if not sampled or any(s != value for s in sampled):
            failures.append(f"{instance} ω = {w}, 𝔡 = {rep}: ε = {value}")
    scope = f"n ≤ {top}"
    return [tally("ε independent of τ", scope, failures, total, started)]


def _random_matrix(rng: random.Random) -> list[list[int]]:
    rows, cols, inner = rng.randint(1, 7), rng.randint(1, 7), rng.randint(1, 7)
    left = [[rng.randint(-9, 9) for _ in range(inner)] for _ in range(rows)]
    right = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(inner)]
    return [
        [sum(left[i][k] * right[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def rank_methods(bounds: SuiteBounds) -> list[CheckResult]:
    """Bareiss and Gauss-Jordan ranks agree; reduction mod p never raises the rank."""
    rng = rng_for(bounds.seed, "rank_methods")
    started = time.perf_counter()
    failures = []
    count = 2 * bounds.samples
    for k in range(count):
        matrix = _random_matrix(rng)
        over_q = rank_bareiss(matrix)
        if over_q != rank_gauss(matrix):
            failures.append(f"matrix {k}: Bareiss {over_q}, Gauss {rank_gauss(matrix)}")
        for p in SMALL_PRIMES:
            if rank(matrix, FieldSpec.prime(p)) > over_q:
                failures.append(f"matrix {k}: rank mod {p} above rank over Q")
    scope = f"{count} random matrices"
    return [tally("rank methods", scope, failures, count, started)]


PROPERTY_CHECKS: dict[str, Callable[[SuiteBounds], list[CheckResult]]] = {
    "counting_identities": counting_identities,
    "standard_counts": standard_counts,
    "straightening_consistency": straightening_consistency,
    "specht_relations": specht_relations,
    "garnir_vanishing": garnir_vanishing,
    "signed_action": signed_action,
    "equivariance_sweep": equivariance_sweep,
    "column_garnir_vanishing": column_garnir_vanishing,
    "semisimple_basis": semisimple_basis,
    "stabilizer_diagonal": stabilizer_diagonal,
    "independence_mod_p": independence_mod_p,
    "structural": structural,
    "sign_equivariance": sign_equivariance,
    "coefficient_agreement": coefficient_agreement,
    "theta_methods": theta_methods,
    "invariance": invariance,
    "double_coset_membership": double_coset_membership,
    "epsilon_factorizations": epsilon_factorizations,
    "rank_methods": rank_methods,
}
