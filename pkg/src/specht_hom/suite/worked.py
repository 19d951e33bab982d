"""Checks of the worked examples with known answers.

Implements:
- `WORKED_CHECKS`: Check name → check function.
"""

import logging
import math
import time
from collections.abc import Callable

from specht_hom.group import (
    Permutation,
    column_stabilizer,
    coset_decompose,
    coset_tableau,
    distinguished_transversal,
)
from specht_hom.hom import (
    a_coeff,
    a_coeff_orbit,
    gamma_sstd,
    in_C,
    in_R,
    li_condition,
    theta_matrix,
)
from specht_hom.linalg import FieldSpec, hom_dim_oracle, rank, stack_rows
from specht_hom.specht import straightener
from specht_hom.suite.common import equivariance_failures, rng_for
from specht_hom.suite.config import SuiteBounds
from specht_hom.suite.instances import (
    HOOK_2,
    HOOK_3,
    HOOK_3_A_RANGE,
    HOOK_3_A_VALUES,
    HOOK_3_ORBITS,
    HOOK_3_REPS,
    HOOK_3_SSTD,
    HOOK_3_TABLEAUX,
    SIGN_6,
    SMALL_MIXED,
    SMALL_MIXED_SSTD,
    STAIRCASE_6,
    STAIRCASE_6_SIZES,
    Instance,
)
from specht_hom.suite.report import CheckResult, record, tally
from specht_hom.tableaux import (
    Bicomposition,
    Composition,
    Partition,
    enumerate_color_tableaux,
    enumerate_semistandard,
)

worked_logger = logging.getLogger(__name__)


def _sstd_strings(instance: Instance) -> set[str]:
    return {str(t) for t in enumerate_semistandard(instance.shape, instance.type)}


def semistandard_counts(_: SuiteBounds) -> list[CheckResult]:
    """|sstd| for the small mixed type and the hooks at p = 2, 3."""
    out = []
    cases: list[tuple[Instance, int, list[str] | None]] = [
        (SMALL_MIXED, 1, [SMALL_MIXED_SSTD]),
        (HOOK_3, 2, sorted(HOOK_3_SSTD)),
        (HOOK_2, 2, None),
    ]
    for instance, count, expected in cases:
        started = time.perf_counter()
        found = sorted(_sstd_strings(instance))
        out.append(record("sstd count", str(instance), count, len(found), started))
        if expected is not None:
            out.append(record("sstd tableaux", str(instance), expected, found, started))
    return out


def hook_tableaux(_: SuiteBounds) -> list[CheckResult]:
    """T_{d_i} for the three representatives of the p = 3 hook."""
    out = []
    for label, d in HOOK_3_REPS.items():
        started = time.perf_counter()
        computed = str(coset_tableau(d, HOOK_3.t0, HOOK_3.type))
        expected = HOOK_3_TABLEAUX[label]
        out.append(record("T_d", f"{HOOK_3} d = {d}", expected, computed, started))
    return out


def hook_coefficients(_: SuiteBounds) -> list[CheckResult]:
    """The six tabulated a_{d,𝔡}, by both formulas."""
    out = []
    for (d_label, rep_label), expected in HOOK_3_A_VALUES.items():
        d, rep = HOOK_3_REPS[d_label], HOOK_3_REPS[rep_label]
        instance = f"{HOOK_3} a({d_label}, {rep_label})"
        for name, func in (("a_coeff", a_coeff), ("a_coeff_orbit", a_coeff_orbit)):
            started = time.perf_counter()
            computed = func(d, rep, HOOK_3.t0, HOOK_3.type)
            out.append(record(name, instance, expected, computed, started))
    return out


def hook_coefficient_range(bounds: SuiteBounds) -> list[CheckResult]:
    """a_{d,d_2}, a_{d,d_3} ∈ {0, ±8, ±12} for random d ∈ S_7."""
    rng = rng_for(bounds.seed, "hook_coefficient_range")
    started = time.perf_counter()
    failures = []
    for _ in range(bounds.random_a):
        d = Permutation.random(7, rng)
        for label in ("d2", "d3"):
            value = a_coeff_orbit(d, HOOK_3_REPS[label], HOOK_3.t0, HOOK_3.type)
            if value not in HOOK_3_A_RANGE:
                failures.append(f"a({d}, {label}) = {value}")
    worked_logger.info("Sampled %d random d for %s", bounds.random_a, HOOK_3)
    return [tally("a range", str(HOOK_3), failures, 2 * bounds.random_a, started)]


def hook_orbits(_: SuiteBounds) -> list[CheckResult]:
    """The C_{t0}-orbits on tableaux of type (∅|(3,2,2)) against column signatures."""
    started = time.perf_counter()
    ab = HOOK_3.type
    gamma = distinguished_transversal(ab)
    columns = list(column_stabilizer(HOOK_3.t0))
    seen: set[Permutation] = set()
    orbits = 0
    for d in gamma:
        if d in seen:
            continue
        orbits += 1
        seen.update(coset_decompose(sigma * d, ab).rep for sigma in columns)
    signatures = {
        t.column_contents() for t in enumerate_color_tableaux(HOOK_3.shape, ab)
    }
    return [
        record("C_t0-orbits", str(HOOK_3), HOOK_3_ORBITS, orbits, started),
        record("column signatures", str(HOOK_3), orbits, len(signatures), started),
    ]


def hook_gamma_sstd(_: SuiteBounds) -> list[CheckResult]:
    """Γ_sstd of the p = 3 hook and its membership in ℛ ∩ 𝒞."""
    started = time.perf_counter()
    reps = gamma_sstd(HOOK_3.type, HOOK_3.t0)
    found = sorted(str(coset_tableau(d, HOOK_3.t0, HOOK_3.type)) for d in reps)
    in_both = all(
        in_R(d, HOOK_3.t0, HOOK_3.type) and in_C(d, HOOK_3.t0, HOOK_3.type)
        for d in reps
    )
    return [
        record("Γ_sstd", str(HOOK_3), sorted(HOOK_3_SSTD), found, started),
        record("Γ_sstd ⊆ ℛ ∩ 𝒞", str(HOOK_3), True, in_both, started),
    ]


def equivariance_instances(_: SuiteBounds) -> list[CheckResult]:
    """M(s_k)·Θᵀ = Θᵀ·S(s_k) on the hooks and the staircase."""
    out = []
    for instance in (HOOK_2, STAIRCASE_6, HOOK_3):
        started = time.perf_counter()
        failures, total = equivariance_failures(instance)
        out.append(tally("equivariance", str(instance), failures, total, started))
    return out


def hook_dependence(_: SuiteBounds) -> list[CheckResult]:
    """θ̂_{d_2} ≡ -θ̂_{d_3} mod 3, both nonzero; ranks 2 over Q and 1 over F_3."""
    t0, ab = HOOK_3.t0, HOOK_3.type
    started = time.perf_counter()
    second = theta_matrix(HOOK_3_REPS["d2"], t0, ab).entries
    third = theta_matrix(HOOK_3_REPS["d3"], t0, ab).entries
    summed = {
        (a + b) % 3 for row2, row3 in zip(second, third) for a, b in zip(row2, row3)
    }
    nonzero = [any(v % 3 for row in m for v in row) for m in (second, third)]
    stacked = stack_rows(second, third)
    over_q = rank(stacked, FieldSpec.rationals())
    over_f3 = rank(stacked, FieldSpec.prime(3))
    condition = li_condition(HOOK_3.shape, ab, 3)
    name = str(HOOK_3)
    return [
        record("θ̂_d2 + θ̂_d3 mod 3", name, {0}, summed, started),
        record("nonzero mod 3", name, [True, True], nonzero, started),
        record("rank over Q", name, 2, over_q, started),
        record("rank over F_3", name, 1, over_f3, started),
        record("li_condition p = 3", name, False, condition, started),
    ]


def staircase_hom(bounds: SuiteBounds) -> list[CheckResult]:
    """Hom(S^(3,2,1), M((3)|(3))) vanishes except in characteristic 3."""
    shape, ab = STAIRCASE_6.shape, STAIRCASE_6.type
    started = time.perf_counter()
    out = [
        record(
            "f, |Γ|",
            str(STAIRCASE_6),
            STAIRCASE_6_SIZES,
            (straightener(shape).dim, ab.index()),
            started,
        ),
        record(
            "sstd count",
            str(STAIRCASE_6),
            0,
            len(enumerate_semistandard(shape, ab)),
            started,
        ),
    ]
    for field in (FieldSpec.rationals(), FieldSpec.prime(5), FieldSpec.prime(7)):
        started = time.perf_counter()
        dim = hom_dim_oracle(shape, ab, field, bounds.hom_bound)
        out.append(record(f"hom dim over {field}", str(STAIRCASE_6), 0, dim, started))
    started = time.perf_counter()
    dim = hom_dim_oracle(shape, ab, FieldSpec.prime(3), bounds.hom_bound)
    out.append(
        record("hom dim over F_3", str(STAIRCASE_6), "≥ 1", dim, started, dim >= 1)
    )
    return out


def sign_module(bounds: SuiteBounds) -> list[CheckResult]:
    """θ̂ = [6!] for (1^6), (∅|(6)); zero mod 2, 3, 5 though Hom has dimension 1."""
    shape, ab = SIGN_6.shape, SIGN_6.type
    started = time.perf_counter()
    entries = theta_matrix(Permutation.identity(6), SIGN_6.t0, ab).entries
    out = [record("θ̂", str(SIGN_6), ((720,),), entries, started)]
    for p in (2, 3, 5):
        field = FieldSpec.prime(p)
        started = time.perf_counter()
        reduced = [[field.reduce(v) for v in row] for row in entries]
        out.append(record(f"θ̂ mod {p}", str(SIGN_6), [[0]], reduced, started))
        started = time.perf_counter()
        dim = hom_dim_oracle(shape, ab, field, bounds.hom_bound)
        out.append(record(f"hom dim over {field}", str(SIGN_6), 1, dim, started))
    return out


def theta_one_by_one(bounds: SuiteBounds) -> list[CheckResult]:
    """θ̂ = [n!] for (1^n), (∅|(n)) and [1] for (n), ((n)|∅)."""
    out = []
    for n in range(1, bounds.max_n + 1):
        block = Composition((n,))
        column = Instance.default(
            Partition((1,) * n), Bicomposition(Composition(), block)
        )
        row = Instance.default(Partition((n,)), Bicomposition(block, Composition()))
        for instance, expected in ((column, math.factorial(n)), (row, 1)):
            started = time.perf_counter()
            identity = Permutation.identity(n)
            entries = theta_matrix(identity, instance.t0, instance.type).entries
            out.append(record("θ̂", str(instance), ((expected,),), entries, started))
    return out


WORKED_CHECKS: dict[str, Callable[[SuiteBounds], list[CheckResult]]] = {
    "semistandard_counts": semistandard_counts,
    "hook_tableaux": hook_tableaux,
    "hook_coefficients": hook_coefficients,
    "hook_coefficient_range": hook_coefficient_range,
    "hook_orbits": hook_orbits,
    "hook_gamma_sstd": hook_gamma_sstd,
    "equivariance_instances": equivariance_instances,
    "hook_dependence": hook_dependence,
    "staircase_hom": staircase_hom,
    "sign_module": sign_module,
    "theta_one_by_one": theta_one_by_one,
}
