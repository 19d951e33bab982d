import pytest
from hypothesis import given
from hypothesis import strategies as st

from specht_hom.exceptions import (
    InvalidObjectError,
    ParsingError,
    ShapeMismatchError,
    SizeBoundError,
)
from specht_hom.linalg import (
    FieldKind,
    FieldSpec,
    hom_dim_oracle,
    is_prime,
    rank,
    rank_bareiss,
    rank_gauss,
    stack_rows,
)
from specht_hom.tableaux import Bicomposition, Composition, Partition

QQ = FieldSpec.rationals()

matrices = st.integers(1, 5).flatmap(
    lambda cols: st.lists(
        st.lists(st.integers(-6, 6), min_size=cols, max_size=cols),
        min_size=1,
        max_size=5,
    )
)


def test_field_parsing():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("Q").kind is FieldKind.RATIONALS
    assert FieldSpec.parse("7") == FieldSpec.prime(7)
    assert str(FieldSpec.prime(7)) == "F_7"
    assert str(QQ) == "Q"
    with pytest.raises(InvalidObjectError):
        FieldSpec.parse("8")
    with pytest.raises(ParsingError):
        FieldSpec.parse("x")
    with pytest.raises(ParsingError):
        FieldSpec.parse("")


def test_reduction():
    assert FieldSpec.prime(3).reduce(-1) == 2
    assert FieldSpec.prime(2).reduce(720) == 0
    assert QQ.reduce(-5) == -5
    assert FieldSpec.prime(5).characteristic == 5


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_ranks():
    assert rank([[1, 2], [2, 4]], QQ) == 1
    assert rank([[1, 2], [3, 4]], QQ) == 2
    assert rank([[1, 2], [3, 4]], FieldSpec.prime(2)) == 1
    assert rank([[2, 0], [0, 3]], FieldSpec.prime(3)) == 1
    assert rank([], QQ) == 0
    assert rank([[]], FieldSpec.prime(5)) == 0


def test_ragged_rows_raise():
    with pytest.raises(ShapeMismatchError):
        rank([[1, 2], [3]], QQ)
    with pytest.raises(ShapeMismatchError):
        stack_rows([[1, 2]], [[1]])


def test_stack_rows():
    assert stack_rows([[1, 2]], [[3, 4], [5, 6]]) == [[1, 2], [3, 4], [5, 6]]
    assert stack_rows() == []


@given(matrices)
def test_bareiss_and_gauss_agree(rows):
    assert rank_bareiss(rows) == rank_gauss(rows)


@given(matrices, st.sampled_from([2, 3, 5, 7]))
def test_reduction_never_raises_the_rank(rows, p):
    assert rank(rows, FieldSpec.prime(p)) <= rank(rows, QQ)


@pytest.mark.parametrize(
    "shape, ab, field, expected",
    [
        ((1,), Bicomposition(Composition((1,))), QQ, 1),
        ((2, 1), Bicomposition(Composition((2, 1))), QQ, 1),
        ((2, 1), Bicomposition(Composition((1, 1, 1))), QQ, 2),
        ((1, 1, 1), Bicomposition(beta=Composition((3,))), QQ, 1),
        ((2,), Bicomposition(beta=Composition((2,))), QQ, 0),
        ((2,), Bicomposition(beta=Composition((2,))), FieldSpec.prime(2), 1),
        ((1, 1), Bicomposition(beta=Composition((1, 1))), QQ, 1),
        ((3,), Bicomposition(Composition((1,)), Composition((2,))), QQ, 0),
    ],
)
def test_hom_dimensions(shape, ab, field, expected):
    assert hom_dim_oracle(Partition(shape), ab, field) == expected


def test_hom_dim_checks():
    ab = Bicomposition(Composition((1, 1, 1)))
    with pytest.raises(ShapeMismatchError):
        hom_dim_oracle(Partition((2,)), ab, QQ)
    with pytest.raises(SizeBoundError):
        hom_dim_oracle(Partition((2, 1)), ab, QQ, bound=5)
