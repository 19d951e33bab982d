import itertools
import random

import pytest
from conftest import bicompositions, instances, permutations
from hypothesis import assume, given
from hypothesis import strategies as st

from specht_hom.exceptions import (
    InvalidObjectError,
    NotInDoubleCosetError,
    NotInRError,
    ShapeMismatchError,
)
from specht_hom.group import (
    Permutation,
    YoungSubgroupSpec,
    column_stabilizer,
    coset_decompose,
    coset_tableau,
    distinguished_transversal,
    epsilon,
    in_row_double_coset,
    random_row_element,
    random_transversal,
    random_young_element,
    rho,
    row_double_coset,
    row_factor,
    row_stabilizer,
    young_subgroup,
)
from specht_hom.hom import in_R
from specht_hom.tableaux import Bicomposition, Composition, Partition, initial_tableau


def test_products_compose_as_functions():
    s = Permutation.from_cycles(3, [(1, 2)])
    t = Permutation.from_cycles(3, [(2, 3)])
    assert (s * t).images == (2, 3, 1)
    assert Permutation.from_cycles(3, [(1, 2, 3)]).images == (2, 3, 1)


def test_cycle_notation():
    sigma = Permutation((3, 1, 2, 5, 4))
    assert sigma.cycles() == [(1, 3, 2), (4, 5)]
    assert str(sigma) == "(1 3 2)(4 5)"
    assert str(Permutation.identity(3)) == "()"
    assert sigma.sign == -1


def test_invalid_permutations():
    with pytest.raises(InvalidObjectError):
        Permutation((1, 1, 2))
    with pytest.raises(InvalidObjectError):
        Permutation.from_cycles(3, [(1, 2), (2, 3)])
    with pytest.raises(ShapeMismatchError):
        Permutation.identity(2) * Permutation.identity(3)


def test_shift_and_restrict():
    swap = Permutation((2, 1))
    shifted = swap.shift(1, 4)
    assert shifted.images == (1, 3, 2, 4)
    assert shifted.restrict(range(2, 4)) == swap
    with pytest.raises(InvalidObjectError):
        shifted.restrict(range(1, 3))


@given(
    st.integers(1, 7).flatmap(lambda n: st.tuples(permutations(n), permutations(n)))
)
def test_sign_is_multiplicative(pair):
    sigma, tau = pair
    assert (sigma * tau).sign == sigma.sign * tau.sign
    assert (sigma * sigma.inverse()).is_identity()


def test_distinguished_transversal_order():
    ab = Bicomposition(Composition((2,)), Composition((1,)))
    gamma = distinguished_transversal(ab)
    assert [d.images for d in gamma] == [(1, 2, 3), (1, 3, 2), (2, 3, 1)]
    assert gamma.index[Permutation((1, 3, 2))] == 1


@given(bicompositions(6))
def test_transversal_has_one_increasing_rep_per_coset(ab):
    gamma = distinguished_transversal(ab)
    assert len(gamma) == ab.index()
    assert list(gamma) == sorted(gamma)
    for d in gamma:
        for block in ab.blocks():
            images = [d(i) for i in block]
            assert images == sorted(images)


@given(
    bicompositions(7).flatmap(lambda ab: st.tuples(st.just(ab), permutations(ab.n)))
)
def test_coset_decompose_factors(pair):
    ab, x = pair
    rep, xi_alpha, xi_beta = coset_decompose(x, ab)
    a = ab.alpha.n
    assert rep in distinguished_transversal(ab).index
    assert x == rep * xi_alpha.shift(0, ab.n) * xi_beta.shift(a, ab.n)


def test_young_subgroup_order_and_signs():
    ab = Bicomposition(Composition((2,)), Composition((2, 1)))
    spec = YoungSubgroupSpec.from_bicomposition(ab)
    elements = list(young_subgroup(ab))
    assert len(elements) == 4
    assert all(spec.contains(x) for x in elements)
    signs = sorted(spec.signed_sign(x) for x in elements)
    assert signs == [-1, -1, 1, 1]
    unsigned = Permutation.from_cycles(5, [(1, 2)])
    assert spec.in_unsigned_factor(unsigned)
    assert spec.signed_sign(unsigned) == 1
    assert not spec.contains(Permutation.from_cycles(5, [(2, 3)]))


def test_stabilizer_orders():
    t = initial_tableau(Partition((3, 2)))
    assert len(list(row_stabilizer(t))) == 12
    assert len(list(column_stabilizer(t))) == 4


@given(instances(6), st.randoms(use_true_random=False))
def test_coset_tableau_is_constant_on_cosets(instance, rng):
    ab, t0 = instance.type, instance.t0
    d = Permutation.random(ab.n, rng)
    xi = random_young_element(ab, rng)
    assert coset_tableau(d * xi, t0, ab) == coset_tableau(d, t0, ab)


def test_coset_tableau_colours_by_inverse(hook):
    d = Permutation.from_cycles(7, [(5, 7)])
    assert str(coset_tableau(d, hook.t0, hook.type)) == "d1,d2/d1/d1/d2/d3/d3"
    with pytest.raises(ShapeMismatchError):
        coset_tableau(Permutation.identity(6), hook.t0, hook.type)


@given(st.integers(1, 7).flatmap(permutations))
def test_rho_moves_t0_onto_t(sigma):
    shape = Partition((sigma.n,)) if sigma.n < 4 else Partition((sigma.n - 2, 2))
    t0 = initial_tableau(shape)
    t = t0.relabel(sigma)
    assert t0.relabel(rho(t, t0)) == t
    assert rho(t, t0) == sigma


def test_random_transversal_covers_every_coset():
    ab = Bicomposition(Composition((1,)), Composition((2, 1)))
    transversal, factors = random_transversal(ab, random.Random(3))
    reps = {coset_decompose(r, ab).rep for r in transversal}
    assert reps == set(distinguished_transversal(ab))
    assert len(factors) == len(transversal)


def test_row_double_coset_membership(hook):
    rep = Permutation.from_cycles(7, [(5, 7)])
    rng = random.Random(7)
    members = row_double_coset(rep, hook.t0, hook.type)
    assert rep in members
    for _ in range(20):
        tau = random_row_element(hook.t0, rng)
        xi = random_young_element(hook.type, rng)
        omega = tau * rep * xi
        assert omega in members
        assert in_row_double_coset(omega, rep, hook.t0, hook.type)
        found = row_factor(omega, rep, hook.t0, hook.type)
        assert found in set(row_stabilizer(hook.t0))
        moved = coset_tableau(found.inverse() * omega, hook.t0, hook.type)
        assert moved == coset_tableau(rep, hook.t0, hook.type)
        spec = YoungSubgroupSpec.from_bicomposition(hook.type)
        assert epsilon(omega, rep, hook.t0, hook.type) == spec.signed_sign(xi)


def test_row_factor_outside_the_double_coset(hook):
    rep = Permutation.identity(7)
    other = Permutation.from_cycles(7, [(5, 7)])
    assert not in_row_double_coset(other, rep, hook.t0, hook.type)
    with pytest.raises(NotInDoubleCosetError):
        row_factor(other, rep, hook.t0, hook.type)


def test_epsilon_needs_a_rep_in_r():
    shape = Partition((2,))
    ab = Bicomposition(Composition(), Composition((2,)))
    rep = Permutation.identity(2)
    with pytest.raises(NotInRError):
        epsilon(rep, rep, initial_tableau(shape), ab)


@given(instances(4))
def test_double_coset_membership_matches_enumeration(instance):
    t0, ab = instance.t0, instance.type
    everything = [Permutation(p) for p in itertools.permutations(range(1, ab.n + 1))]
    for rep in distinguished_transversal(ab):
        members = row_double_coset(rep, t0, ab)
        found = {w for w in everything if in_row_double_coset(w, rep, t0, ab)}
        assert found == members


@given(instances(5, 2), st.randoms(use_true_random=False))
def test_epsilon_is_independent_of_the_factorization(instance, rng):
    t0, ab = instance.t0, instance.type
    reps = [d for d in distinguished_transversal(ab) if in_R(d, t0, ab)]
    assume(reps)
    spec = YoungSubgroupSpec.from_bicomposition(ab)
    rep = rng.choice(reps)
    omega = random_row_element(t0, rng) * rep * random_young_element(ab, rng)
    xis = [rep.inverse() * tau.inverse() * omega for tau in row_stabilizer(t0)]
    signs = {spec.signed_sign(xi) for xi in xis if spec.contains(xi)}
    assert signs == {epsilon(omega, rep, t0, ab)}
