"""Homomorphisms from integral Specht modules to signed Young permutation modules.

Subpackages:
- `tableaux`: Partitions, bicompositions, numeric and coloured tableaux.
- `group`: Permutations, Young subgroups, transversals, coset signs.
- `specht`: Tabloids, polytabloids, Garnir sums, straightening.
- `signed`: The signed permutation module and its action matrices.
- `hom`: The coefficients a_{d,𝔡}, the maps θ̂_𝔡 and the pre-order.
- `linalg`: Exact ranks and the Hom-space dimension oracle.
- `suite`: The verification suite.
"""

__version__ = "0.1.0"
