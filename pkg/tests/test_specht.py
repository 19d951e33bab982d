import pytest
from conftest import partitions, permutations
from hypothesis import given
from hypothesis import strategies as st

from specht_hom.exceptions import InvalidObjectError, ShapeMismatchError
from specht_hom.group import Permutation
from specht_hom.specht import (
    GarnirSpec,
    Tabloid,
    TabloidVector,
    act_on_tableau,
    column_sort,
    garnir_specs,
    garnir_sum,
    mapping_sign,
    polytabloid_expansion,
    specht_action_matrix,
    specht_generator_matrices,
    straighten,
    straightener,
)
from specht_hom.tableaux import (
    NumericTableau,
    Partition,
    count_standard,
    enumerate_standard_tableaux,
    initial_tableau,
)


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def _tableaux(max_n):
    """A shape with a random filling."""
    return partitions(max_n, 2).flatmap(
        lambda shape: permutations(shape.n).map(
            lambda sigma: initial_tableau(shape).relabel(sigma)
        )
    )


def test_tabloid_of_sorts_rows():
    t = NumericTableau(((3, 1), (2,)))
    assert Tabloid.of(t).rows == ((1, 3), (2,))
    assert str(Tabloid.of(t)) == "{1,3/2}"


def test_tabloid_vector_drops_zeros():
    vector = TabloidVector()
    tabloid = Tabloid(((1, 2),))
    vector.add(tabloid, 2)
    vector.add(tabloid, -2)
    assert vector.is_zero()
    assert len(vector) == 0


@given(_tableaux(5))
def test_polytabloid_has_one_term_per_column_permutation(t):
    size = 1
    for length in t.shape.column_lengths():
        for k in range(2, length + 1):
            size *= k
    assert len(polytabloid_expansion(t)) == size


def test_column_sort_sign():
    sign, sorted_t = column_sort(NumericTableau(((3, 1), (2,), (4,))))
    assert sorted_t.rows == ((2, 1), (3,), (4,))
    assert sign == -1


def test_mapping_sign():
    assert mapping_sign([1, 2, 3], [1, 2, 3]) == 1
    assert mapping_sign([1, 2, 3], [2, 1, 3]) == -1
    assert mapping_sign([4, 2], [2, 4]) == -1


@pytest.mark.parametrize("parts", [(1,), (2, 1), (2, 2), (3, 2), (2, 2, 1)])
def test_standard_tableaux_straighten_to_units(parts):
    shape = Partition(parts)
    basis = enumerate_standard_tableaux(shape)
    for k, s in enumerate(basis):
        coords = straighten(s).coords
        assert coords == tuple(int(j == k) for j in range(len(basis)))
    assert straightener(shape).dim == count_standard(shape)


def test_straighten_two_by_two():
    t = NumericTableau(((2, 1), (3, 4)))
    vector = straighten(t)
    combined = TabloidVector.combine(
        (c, polytabloid_expansion(s))
        for c, s in zip(vector.coords, straightener(t.shape).basis)
    )
    assert combined.terms == polytabloid_expansion(t).terms


@given(_tableaux(6))
def test_straightening_reproduces_the_polytabloid(t):
    basis = straightener(t.shape).basis
    combined = TabloidVector.combine(
        (c, polytabloid_expansion(s))
        for c, s in zip(straighten(t).coords, basis)
        if c
    )
    assert combined.terms == polytabloid_expansion(t).terms


def test_straighten_rejects_other_shapes():
    with pytest.raises(ShapeMismatchError):
        straightener(Partition((2, 1))).straighten(initial_tableau(Partition((3,))))


def test_garnir_spec_validation():
    shape = Partition((2, 2))
    with pytest.raises(InvalidObjectError):
        GarnirSpec(((1, 1),), ((1, 2),)).validate(shape)
    with pytest.raises(InvalidObjectError):
        GarnirSpec(((1, 2),), ((1, 1),)).validate(shape)
    GarnirSpec(((1, 1), (2, 1)), ((1, 2),)).validate(shape)


def test_garnir_sum_size():
    t = initial_tableau(Partition((2, 2)))
    terms = garnir_sum(t, GarnirSpec(((1, 1), (2, 1)), ((1, 2),)))
    assert len(terms) == 3
    assert (1, t) in terms


@given(_tableaux(5), st.randoms(use_true_random=False))
def test_garnir_sums_vanish(t, rng):
    specs = garnir_specs(t.shape)
    if not specs:
        return
    spec = rng.choice(specs)
    terms = garnir_sum(t, spec)
    tabloids = TabloidVector.combine(
        (sign, polytabloid_expansion(u)) for sign, u in terms
    )
    assert tabloids.is_zero()


@pytest.mark.parametrize("parts", [(2, 1), (3, 1), (2, 2), (2, 1, 1), (3, 2)])
def test_action_is_a_homomorphism(parts):
    shape = Partition(parts)
    n = shape.n
    sigma = Permutation.from_cycles(n, [tuple(range(1, n + 1))])
    tau = Permutation.from_cycles(n, [(1, 2)])
    product = _matmul(
        specht_action_matrix(shape, sigma), specht_action_matrix(shape, tau)
    )
    assert product == specht_action_matrix(shape, sigma * tau)


def test_generators_of_the_sign_representation():
    assert specht_generator_matrices(Partition((1, 1, 1))) == [[[-1]], [[-1]]]
    assert specht_generator_matrices(Partition((3,))) == [[[1]], [[1]]]


def test_act_on_tableau_size():
    with pytest.raises(ShapeMismatchError):
        act_on_tableau(Permutation.identity(2), initial_tableau(Partition((3,))))
