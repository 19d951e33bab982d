"""Parsing of shapes, types, permutations, tableaux and fields.

- `parse_composition`, `parse_partition`, `parse_bicomposition`: Shapes and types.
- `parse_permutation`, `parse_tableau`: Group elements and tableaux.
- `parse_field`: Q or F_p.
"""

from specht_hom.parser.parse import (
    parse_bicomposition,
    parse_composition,
    parse_field,
    parse_partition,
    parse_permutation,
    parse_tableau,
)
