"""The symmetric group side: permutations, Young subgroups and cosets.

- `Permutation`: One-line permutations with function composition.
- `YoungSubgroupSpec`, `Transversal`, `CosetDecomposition`: Young subgroup data.
- `young_subgroup`, `row_stabilizer`, `column_stabilizer`: Group enumeration.
- `random_young_element`, `random_row_element`, `random_column_element`,
    `random_transversal`: Seeded sampling.
- `distinguished_transversal`, `coset_decompose`, `coset_tableau`, `rho`:
    The coset ↔ tableau dictionary.
- `in_row_double_coset`, `row_double_coset`, `row_factor`, `epsilon`:
    Row double cosets and the sign ε_𝔡.
"""

from specht_hom.group.cosets import (
    epsilon,
    in_row_double_coset,
    row_double_coset,
    row_factor,
)
from specht_hom.group.perm import Permutation
from specht_hom.group.young import (
    CosetDecomposition,
    Transversal,
    YoungSubgroupSpec,
    column_stabilizer,
    coset_decompose,
    coset_tableau,
    distinguished_transversal,
    random_column_element,
    random_row_element,
    random_transversal,
    random_young_element,
    rho,
    row_stabilizer,
    young_subgroup,
)
