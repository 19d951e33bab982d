"""Shared fixtures and hypothesis strategies."""

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from specht_hom.group import Permutation
from specht_hom.suite.instances import HOOK_3, SMALL_MIXED, Instance
from specht_hom.tableaux import (
    Bicomposition,
    Partition,
    enumerate_bicompositions,
    enumerate_partitions,
)

settings.register_profile("default", max_examples=30, deadline=None)
settings.load_profile("default")


def permutations(n: int) -> st.SearchStrategy[Permutation]:
    """Uniform elements of S_n."""
    return st.permutations(range(1, n + 1)).map(lambda p: Permutation(tuple(p)))


def partitions(max_n: int, min_n: int = 1) -> st.SearchStrategy[Partition]:
    """Partitions of some n in min_n..max_n."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.sampled_from(enumerate_partitions(n))
    )


def instances(max_n: int, min_n: int = 1) -> st.SearchStrategy[Instance]:
    """Default instances (λ, (α|β), t^λ) with |λ| in min_n..max_n."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.builds(
            Instance.default,
            st.sampled_from(enumerate_partitions(n)),
            st.sampled_from(enumerate_bicompositions(n)),
        )
    )


def bicompositions(max_n: int, min_n: int = 1) -> st.SearchStrategy[Bicomposition]:
    """Bicompositions of some n in min_n..max_n."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.sampled_from(enumerate_bicompositions(n))
    )


@pytest.fixture
def hook() -> Instance:
    """λ = (2,1^5), (∅|(3,2,2)) with the first column filled by 1..6."""
    return HOOK_3


@pytest.fixture
def small_mixed() -> Instance:
    """λ = (2,2,1), ((2)|(2,1)) with t^λ."""
    return SMALL_MIXED
