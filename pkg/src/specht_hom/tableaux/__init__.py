"""Partitions, bicompositions and tableaux.

- `Partition`, `Composition`, `Bicomposition`: Shapes and types.
- `NumericTableau`: Bijective λ-tableaux.
- `Color`, `ColorTableau`: λ-tableaux of type (α|β).
- `enumerate_partitions`, `enumerate_compositions`, `enumerate_bicompositions`:
    Deterministic sweeps.
- `conjugate`, `hook_lengths`, `count_standard`, `is_p_core`: Shape invariants.
- `initial_tableau`, `enumerate_standard_tableaux`: Numeric tableaux.
- `enumerate_color_tableaux`, `is_semistandard`, `enumerate_semistandard`:
    Coloured tableaux.
- `palette`, `value_colors`, `stabilizer_order`: Colour helpers.
- `rows_repeat_only_unsigned`, `columns_repeat_only_signed`: Repeat conditions.
"""

from specht_hom.tableaux.colors import (
    Color,
    ColorTableau,
    columns_repeat_only_signed,
    enumerate_color_tableaux,
    enumerate_semistandard,
    is_semistandard,
    palette,
    rows_repeat_only_unsigned,
    stabilizer_order,
    value_colors,
)
from specht_hom.tableaux.partitions import (
    Bicomposition,
    Composition,
    Partition,
    conjugate,
    count_standard,
    enumerate_bicompositions,
    enumerate_compositions,
    enumerate_partitions,
    hook_lengths,
    is_p_core,
)
from specht_hom.tableaux.tableaux import (
    Cell,
    NumericTableau,
    enumerate_standard_tableaux,
    initial_tableau,
)
