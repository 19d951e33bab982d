import pytest

from specht_hom.exceptions import ParsingError
from specht_hom.group import Permutation, distinguished_transversal
from specht_hom.linalg import FieldSpec
from specht_hom.parser import (
    parse_bicomposition,
    parse_composition,
    parse_field,
    parse_partition,
    parse_permutation,
    parse_tableau,
)
from specht_hom.tableaux import Bicomposition, Composition, Partition


def test_parse_partition():
    assert parse_partition("2,2,1") == Partition((2, 2, 1))
    assert parse_partition("2,1^5") == Partition((2, 1, 1, 1, 1, 1))
    assert parse_partition(" 3 , 1 ") == Partition((3, 1))
    assert parse_partition("") == Partition()


@pytest.mark.parametrize(
    "text, position", [("1,2", 0), ("2,x", 2), ("2,0", 2), ("3,,1", 2)]
)
def test_parse_partition_errors(text, position):
    with pytest.raises(ParsingError) as info:
        parse_partition(text)
    assert info.value.position == position
    assert info.value.text == text


def test_parse_composition_keeps_order():
    assert parse_composition("1,3,2") == Composition((1, 3, 2))


def test_parse_bicomposition():
    assert parse_bicomposition("2|2,1") == Bicomposition(
        Composition((2,)), Composition((2, 1))
    )
    assert parse_bicomposition("|3,2,2") == Bicomposition(
        beta=Composition((3, 2, 2))
    )
    assert parse_bicomposition("3|") == Bicomposition(Composition((3,)))


@pytest.mark.parametrize("text, position", [("2,1", 3), ("1|2|3", 3), ("|x", 1)])
def test_parse_bicomposition_errors(text, position):
    with pytest.raises(ParsingError) as info:
        parse_bicomposition(text)
    assert info.value.position == position


def test_parse_permutation_forms():
    assert parse_permutation("[2,1,3]", 3) == Permutation((2, 1, 3))
    assert parse_permutation("(1 2)(3 4)", 4) == Permutation((2, 1, 4, 3))
    assert parse_permutation("(1,3)", 3) == Permutation((3, 2, 1))
    assert parse_permutation("()", 3) == Permutation.identity(3)
    ab = Bicomposition(Composition((2,)), Composition((1,)))
    gamma = distinguished_transversal(ab)
    assert parse_permutation("2", 3, gamma) == Permutation((2, 3, 1))


@pytest.mark.parametrize(
    "text", ["[1,1,2]", "[1,2]", "[1,2,3", "(1 4)", "(1 2)x", "abc", "5"]
)
def test_parse_permutation_errors(text):
    ab = Bicomposition(Composition((2,)), Composition((1,)))
    with pytest.raises(ParsingError):
        parse_permutation(text, 3, distinguished_transversal(ab))


def test_index_needs_a_transversal():
    with pytest.raises(ParsingError):
        parse_permutation("0", 3)


def test_parse_tableau():
    t = parse_tableau("1,7/2/3/4/5/6")
    assert t.rows == ((1, 7), (2,), (3,), (4,), (5,), (6,))
    assert t.shape == Partition((2, 1, 1, 1, 1, 1))


@pytest.mark.parametrize("text", ["1,2/4", "1/2,3", "1,a", "1,,2"])
def test_parse_tableau_errors(text):
    with pytest.raises(ParsingError):
        parse_tableau(text)


def test_parse_field():
    assert parse_field("q") == FieldSpec.rationals()
    assert parse_field("3") == FieldSpec.prime(3)
    with pytest.raises(ParsingError):
        parse_field("4")
