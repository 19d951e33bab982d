import pytest
from conftest import bicompositions, permutations
from hypothesis import given
from hypothesis import strategies as st

from specht_hom.exceptions import ShapeMismatchError
from specht_hom.group import Permutation, distinguished_transversal
from specht_hom.signed import (
    SignedVector,
    act_basis,
    action_matrices,
    signed_action_matrix,
)
from specht_hom.tableaux import Bicomposition, Composition


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def _action_pairs(max_n):
    return bicompositions(max_n, 2).flatmap(
        lambda ab: st.tuples(st.just(ab), permutations(ab.n), permutations(ab.n))
    )


def test_sign_type_acts_by_the_sign():
    ab = Bicomposition(beta=Composition((3,)))
    unit = Permutation.identity(3)
    for sigma in (Permutation((2, 1, 3)), Permutation((2, 3, 1))):
        assert act_basis(sigma, unit, ab) == (sigma.sign, unit)


def test_trivial_type_acts_trivially():
    ab = Bicomposition(Composition((3,)))
    assert action_matrices(ab) == [[[1]], [[1]]]


def test_generator_matrices_of_one_signed_block():
    assert action_matrices(Bicomposition(beta=Composition((2,)))) == [[[-1]]]


def test_mixed_generator():
    ab = Bicomposition(Composition((1,)), Composition((1,)))
    # Γ = [12, 21]; s_1 swaps the two cosets without a sign
    assert action_matrices(ab) == [[[0, 1], [1, 0]]]


def test_act_basis_checks_sizes():
    ab = Bicomposition(Composition((2,)))
    with pytest.raises(ShapeMismatchError):
        act_basis(Permutation.identity(3), Permutation.identity(2), ab)


@given(_action_pairs(6))
def test_signed_action_is_a_homomorphism(data):
    ab, sigma, tau = data
    product = _matmul(signed_action_matrix(ab, sigma), signed_action_matrix(ab, tau))
    assert product == signed_action_matrix(ab, sigma * tau)


@given(_action_pairs(6))
def test_columns_are_signed_units(data):
    ab, sigma, _ = data
    matrix = signed_action_matrix(ab, sigma)
    for col in zip(*matrix):
        nonzero = [v for v in col if v]
        assert len(nonzero) == 1
        assert nonzero[0] in (1, -1)


def test_signed_vector_json():
    ab = Bicomposition(Composition((1,)), Composition((1,)))
    assert len(distinguished_transversal(ab)) == 2
    vector = SignedVector(ab, (3, -1))
    assert vector.to_json() == {
        "type": {"alpha": [1], "beta": [1]},
        "basis": "gamma-distinguished",
        "coords": ["3", "-1"],
    }
