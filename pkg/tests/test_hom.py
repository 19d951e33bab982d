import math
import random

import pytest
from conftest import instances
from hypothesis import given

from specht_hom.exceptions import NotInRError, ShapeMismatchError
from specht_hom.group import (
    Permutation,
    coset_tableau,
    distinguished_transversal,
    random_transversal,
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
    theta_sstd,
    transversal_to_distinguished,
    vartheta,
)
from specht_hom.linalg import FieldSpec, rank, stack_rows
from specht_hom.signed import action_matrices
from specht_hom.specht import specht_generator_matrices
from specht_hom.suite.instances import HOOK_3_A_VALUES, HOOK_3_REPS
from specht_hom.tableaux import (
    Bicomposition,
    Composition,
    Partition,
    enumerate_semistandard,
    initial_tableau,
)


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def _transpose(m):
    return [list(col) for col in zip(*m)]


@given(instances(4))
def test_tableau_and_group_membership_agree(instance):
    t0, ab = instance.t0, instance.type
    for d in distinguished_transversal(ab):
        assert in_R(d, t0, ab) == in_R_by_group(d, t0, ab)
        assert in_C(d, t0, ab) == in_C_by_group(d, t0, ab)


@given(instances(5))
def test_semistandard_reps_lie_in_r_and_c(instance):
    t0, ab = instance.t0, instance.type
    reps = gamma_sstd(ab, t0)
    assert len(reps) == len(enumerate_semistandard(instance.shape, ab))
    for rep in reps:
        assert in_R(rep, t0, ab) and in_C(rep, t0, ab)


@pytest.mark.parametrize("pair", sorted(HOOK_3_A_VALUES))
def test_hook_coefficients(hook, pair):
    d, rep = HOOK_3_REPS[pair[0]], HOOK_3_REPS[pair[1]]
    expected = HOOK_3_A_VALUES[pair]
    assert a_coeff_orbit(d, rep, hook.t0, hook.type) == expected
    assert a_coeff(d, rep, hook.t0, hook.type) == expected


def test_diagonal_coefficient_is_the_stabilizer_order(hook):
    for label in ("d2", "d3"):
        rep = HOOK_3_REPS[label]
        assert stab_column_order(rep, hook.t0, hook.type) == 12
        assert a_coeff_orbit(rep, rep, hook.t0, hook.type) == 12


def test_omega_is_a_union_of_stabilizer_cosets(small_mixed):
    t0, ab = small_mixed.t0, small_mixed.type
    rep = gamma_sstd(ab, t0)[0]
    for d in distinguished_transversal(ab):
        assert len(omega(d, rep, t0, ab)) % stab_column_order(d, t0, ab) == 0


def test_coefficients_need_a_rep_in_r():
    shape = Partition((2,))
    ab = Bicomposition(beta=Composition((2,)))
    t0 = initial_tableau(shape)
    unit = Permutation.identity(2)
    with pytest.raises(NotInRError):
        a_coeff_orbit(unit, unit, t0, ab)
    with pytest.raises(NotInRError):
        theta_matrix(unit, t0, ab)


def test_theta_checks_sizes(hook):
    with pytest.raises(ShapeMismatchError):
        theta_matrix(Permutation.identity(6), hook.t0, hook.type)


@pytest.mark.parametrize("n", range(1, 6))
def test_theta_on_one_by_one_modules(n):
    block = Composition((n,))
    unit = Permutation.identity(n)
    column = Partition((1,) * n)
    sign = theta_matrix(unit, initial_tableau(column), Bicomposition(beta=block))
    assert sign.entries == ((math.factorial(n),),)
    row = Partition((n,))
    trivial = theta_matrix(unit, initial_tableau(row), Bicomposition(block))
    assert trivial.entries == ((1,),)


def test_small_mixed_theta(small_mixed):
    t0, ab = small_mixed.t0, small_mixed.type
    (hom,) = theta_sstd(ab, t0)
    assert hom.rows == 5
    assert hom.cols == 30
    assert not hom.is_zero()
    assert hom == theta_matrix(hom.rep, t0, ab, ThetaMethod.DIRECT)
    payload = hom.to_json()
    assert payload["rows"] == 5
    assert payload["type"] == {"alpha": [2], "beta": [2, 1]}
    assert all(isinstance(v, str) for row in payload["entries"] for v in row)


@given(instances(4, 2))
def test_theta_intertwines_the_actions(instance):
    t0, ab = instance.t0, instance.type
    specht = specht_generator_matrices(instance.shape)
    signed = action_matrices(ab)
    for hom in theta_sstd(ab, t0):
        theta_t = _transpose(hom.entries)
        for s_k, m_k in zip(specht, signed):
            assert _matmul(m_k, theta_t) == _matmul(theta_t, s_k)


def test_vartheta_is_the_row_of_a_standard_tableau(small_mixed):
    t0, ab = small_mixed.t0, small_mixed.type
    rep = gamma_sstd(ab, t0)[0]
    hom = theta_matrix(rep, t0, ab)
    table = a_table(rep, t0, ab)
    assert vartheta(t0, rep, t0, ab, table) == hom.entries[0]
    assert vartheta(t0, rep, t0, ab) == hom.entries[0]


def test_theta_is_independent_of_the_transversal(small_mixed):
    t0, ab = small_mixed.t0, small_mixed.type
    rep = gamma_sstd(ab, t0)[0]
    hom = theta_matrix(rep, t0, ab)
    transversal, _ = random_transversal(ab, random.Random(11))
    rows = theta_on_transversal(rep, t0, ab, transversal)
    assert transversal_to_distinguished(rows, transversal, ab) == hom.entries


def test_hook_dependence_mod_three(hook):
    second = theta_matrix(HOOK_3_REPS["d2"], hook.t0, hook.type).entries
    third = theta_matrix(HOOK_3_REPS["d3"], hook.t0, hook.type).entries
    for row2, row3 in zip(second, third):
        assert all((a + b) % 3 == 0 for a, b in zip(row2, row3))
    stacked = stack_rows(second, third)
    assert rank(stacked, FieldSpec.rationals()) == 2
    assert rank(stacked, FieldSpec.prime(3)) == 1
    assert rank(stacked, FieldSpec.prime(5)) == 2


def test_li_condition(hook):
    assert not li_condition(hook.shape, hook.type, 3)
    assert li_condition(hook.shape, hook.type, 5)


def test_preorder_flags(hook):
    t0, ab = hook.t0, hook.type
    d2, d3 = HOOK_3_REPS["d2"], HOOK_3_REPS["d3"]
    same = preorder(d2, d2, t0, ab)
    assert same.equivalent and not same.greater
    relation = preorder(d2, d3, t0, ab)
    assert relation.geq != relation.leq
    flipped = tableau_preorder(coset_tableau(d3, t0, ab), coset_tableau(d2, t0, ab))
    assert flipped == (relation.leq, relation.geq)
