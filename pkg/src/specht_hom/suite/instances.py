"""Fixed instances with known answers.

Implements:
- `Instance`: A shape, a type and a tableau t_0.
- `hook_instance`: λ = (2,1^{p+2}) with (∅|(p,2,2)) and t_0 filling the first
    column with 1..p+3 and the cell (1,2) with p+4.
- `SMALL_MIXED`, `HOOK_3`, `HOOK_2`, `SIGN_6`, `STAIRCASE_6`: The fixed instances.
- `HOOK_3_REPS`, `HOOK_3_A_VALUES`, `HOOK_3_TABLEAUX`: Data of the p = 3 hook.
"""

from dataclasses import dataclass

from specht_hom.group import Permutation
from specht_hom.tableaux import (
    Bicomposition,
    Composition,
    NumericTableau,
    Partition,
    initial_tableau,
)


@dataclass(frozen=True)
class Instance:
    """A shape λ, a type (α|β) and a tableau t_0 of shape λ.

    Attributes:
        name: Label used in reports.
        shape: λ.
        type: (α|β).
        t0: The fixed tableau.
    """

    name: str
    shape: Partition
    type: Bicomposition
    t0: NumericTableau

    @classmethod
    def default(cls, shape: Partition, ab: Bicomposition) -> "Instance":
        """The instance with t_0 = t^λ."""
        return cls(f"({shape})/({ab})", shape, ab, initial_tableau(shape))

    def __str__(self) -> str:
        return self.name


def hook_instance(p: int) -> Instance:
    """λ = (2,1^{p+2}), (α|β) = (∅|(p,2,2)), first column 1..p+3, (1,2) = p+4."""
    n = p + 4
    shape = Partition((2,) + (1,) * (p + 2))
    rows = ((1, n),) + tuple((k,) for k in range(2, n))
    return Instance(
        f"({shape})/(|{p},2,2)",
        shape,
        Bicomposition(Composition(), Composition((p, 2, 2))),
        NumericTableau(rows),
    )


SMALL_MIXED = Instance.default(
    Partition((2, 2, 1)), Bicomposition(Composition((2,)), Composition((2, 1)))
)
SMALL_MIXED_SSTD = "c1,c1/d1,d2/d1"

HOOK_3 = hook_instance(3)
HOOK_2 = hook_instance(2)

HOOK_3_REPS = {
    "d1": Permutation.from_cycles(7, [(3, 7, 5)]),
    "d2": Permutation.from_cycles(7, [(5, 7)]),
    "d3": Permutation.identity(7),
}
# (d, 𝔡) → a_{d,𝔡}
HOOK_3_A_VALUES = {
    ("d1", "d2"): 8,
    ("d2", "d2"): 12,
    ("d3", "d2"): 0,
    ("d1", "d3"): -8,
    ("d2", "d3"): 0,
    ("d3", "d3"): 12,
}
HOOK_3_A_RANGE = frozenset({-12, -8, 0, 8, 12})
HOOK_3_TABLEAUX = {
    "d1": "d1,d1/d1/d2/d2/d3/d3",
    "d2": "d1,d2/d1/d1/d2/d3/d3",
    "d3": "d1,d3/d1/d1/d2/d2/d3",
}
HOOK_3_SSTD = frozenset({HOOK_3_TABLEAUX["d2"], HOOK_3_TABLEAUX["d3"]})
HOOK_3_ORBITS = 3

SIGN_6 = Instance.default(
    Partition((1,) * 6), Bicomposition(Composition(), Composition((6,)))
)
STAIRCASE_6 = Instance.default(
    Partition((3, 2, 1)), Bicomposition(Composition((3,)), Composition((3,)))
)
STAIRCASE_6_SIZES = (16, 20)
