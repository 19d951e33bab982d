"""Tabloids and polytabloids in M^λ_Z.

Implements:
- `Tabloid`: A row-equivalence class of λ-tableaux in canonical form.
- `TabloidVector`: A finite integer combination of tabloids.
- `polytabloid_expansion`: e_t = Σ_{σ ∈ C_t} sgn(σ)·{σ·t}.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from specht_hom.group import column_stabilizer
from specht_hom.tableaux import NumericTableau


@dataclass(frozen=True, order=True)
class Tabloid:
    """A tabloid {t}; every row sorted ascending.

    Attributes:
        rows: The row sets of {t}, each as an ascending tuple.
    """

    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, t: NumericTableau) -> "Tabloid":
        """The tabloid {t}."""
        return cls(tuple(tuple(sorted(row)) for row in t.rows))

    def __str__(self) -> str:
        return "{" + "/".join(",".join(map(str, row)) for row in self.rows) + "}"


@dataclass
class TabloidVector:
    """An element of M^λ_Z as a map Tabloid → integer with no zero entries.

    Attributes:
        terms: The nonzero coefficients.
    """

    terms: dict[Tabloid, int] = field(default_factory=dict)

    def add(self, tabloid: Tabloid, coeff: int) -> None:
        """Add coeff·{tabloid} in place."""
        total = self.terms.get(tabloid, 0) + coeff
        if total:
            self.terms[tabloid] = total
        else:
            self.terms.pop(tabloid, None)

    def add_vector(self, other: "TabloidVector", scale: int = 1) -> None:
        """Add scale·other in place."""
        for tabloid, coeff in other.terms.items():
            self.add(tabloid, scale * coeff)

    @classmethod
    def combine(cls, parts: Iterable[tuple[int, "TabloidVector"]]) -> "TabloidVector":
        """Σ scale·vector over the given pairs."""
        out = cls()
        for scale, vector in parts:
            out.add_vector(vector, scale)
        return out

    def is_zero(self) -> bool:
        """Whether every coefficient vanishes."""
        return not self.terms

    def __iter__(self) -> Iterator[tuple[Tabloid, int]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)


def polytabloid_expansion(t: NumericTableau) -> TabloidVector:
    """e_t = Σ_{σ ∈ C_t} sgn(σ){σ·t}.

    Distinct σ give distinct tabloids, so there are exactly |C_t| terms.
    """
    out = TabloidVector()
    for sigma in column_stabilizer(t):
        out.add(Tabloid.of(t.relabel(sigma)), sigma.sign)
    return out
