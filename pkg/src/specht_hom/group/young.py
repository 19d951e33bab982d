"""Young subgroups, stabilizers and the distinguished transversal Γ.

Implements:
- `YoungSubgroupSpec`: The blocks of S_{α|β} with their signed flags.
- `Transversal`: An ordered left transversal of S_{α|β} in S_n.
- `CosetDecomposition`: The factors of x = d·ξ_α·ξ_β^{+|α|}.
- `young_subgroup`: Iterate over S_{α|β}.
- `row_stabilizer`, `column_stabilizer`: Iterate over R_t and C_t.
- `distinguished_transversal`: The minimal coset representatives.
- `random_transversal`: A randomly chosen left transversal.
- `coset_decompose`: Split x into its Γ-representative and S_α × S_β parts.
- `coset_tableau`: The coloured tableau T_d = d·T_0.
- `rho`: ρ_t = t∘t0^{-1}.
"""

import itertools
import logging
import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cache, cached_property
from typing import NamedTuple

from specht_hom.exceptions import InvalidObjectError, ShapeMismatchError
from specht_hom.group.perm import Permutation
from specht_hom.tableaux import (
    Bicomposition,
    ColorTableau,
    NumericTableau,
    value_colors,
)

young_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class YoungSubgroupSpec:
    """The blocks of the Young subgroup S_{α|β} ≤ S_n.

    Attributes:
        blocks: Consecutive value intervals covering 1..n.
        signed: Per block, whether it belongs to β.
    """

    blocks: tuple[range, ...]
    signed: tuple[bool, ...]

    @classmethod
    def from_bicomposition(cls, ab: Bicomposition) -> "YoungSubgroupSpec":
        """Blocks of (α|β) read as the concatenated composition of n."""
        blocks = tuple(ab.blocks())
        return cls(blocks, tuple(ab.is_signed_block(k) for k in range(len(blocks))))

    @property
    def n(self) -> int:
        """Degree of the ambient symmetric group."""
        return self.blocks[-1].stop - 1 if self.blocks else 0

    @property
    def alpha_size(self) -> int:
        """|α|, the number of points in unsigned blocks."""
        return sum(len(b) for b, s in zip(self.blocks, self.signed) if not s)

    def contains(self, x: Permutation) -> bool:
        """Whether x ∈ S_{α|β}."""
        return all(
            block.start <= x(i) < block.stop for block in self.blocks for i in block
        )

    def in_signed_factor(self, x: Permutation) -> bool:
        """Whether x ∈ S_β^{+|α|} (moves only points of β blocks)."""
        return self.contains(x) and all(
            x(i) == i
            for block, s in zip(self.blocks, self.signed)
            if not s
            for i in block
        )

    def in_unsigned_factor(self, x: Permutation) -> bool:
        """Whether x ∈ S_α (moves only points of α blocks)."""
        return self.contains(x) and all(
            x(i) == i for block, s in zip(self.blocks, self.signed) if s for i in block
        )

    def signed_sign(self, x: Permutation) -> int:
        """sgn(ξ_β) for x = ξ_α·ξ_β^{+|α|} ∈ S_{α|β}."""
        sign = 1
        for block, s in zip(self.blocks, self.signed):
            if s:
                sign *= x.restrict(block).sign
        return sign


@dataclass(frozen=True)
class Transversal:
    """An ordered left transversal of S_{α|β} in S_n.

    Attributes:
        reps: The representatives, one per left coset.
        spec: The Young subgroup.
    """

    reps: tuple[Permutation, ...]
    spec: YoungSubgroupSpec

    def __len__(self) -> int:
        return len(self.reps)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.reps)

    def __getitem__(self, index: int) -> Permutation:
        return self.reps[index]

    @cached_property
    def index(self) -> dict[Permutation, int]:
        """Position of every representative."""
        return {d: k for k, d in enumerate(self.reps)}


class CosetDecomposition(NamedTuple):
    """x = rep·ξ_α·ξ_β^{+|α|} with ξ_β de-translated to S_{|β|}.

    Attributes:
        rep: The distinguished representative of x·S_{α|β}.
        xi_alpha: The S_α factor.
        xi_beta: The S_β factor.
    """

    rep: Permutation
    xi_alpha: Permutation
    xi_beta: Permutation


def _set_stabilizer(groups: Sequence[Sequence[int]], n: int) -> Iterator[Permutation]:
    """All permutations of {1..n} mapping each group of values onto itself."""
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        images = list(range(1, n + 1))
        for group, image in zip(groups, choice):
            for a, b in zip(group, image):
                images[a - 1] = b
        yield Permutation(tuple(images))


def _random_set_element(
    groups: Sequence[Sequence[int]], n: int, rng: random.Random
) -> Permutation:
    images = list(range(1, n + 1))
    for group in groups:
        for a, b in zip(group, rng.sample(list(group), len(group))):
            images[a - 1] = b
    return Permutation(tuple(images))


def young_subgroup(ab: Bicomposition) -> Iterator[Permutation]:
    """Iterate over S_{α|β}."""
    return _set_stabilizer(ab.blocks(), ab.n)


def random_young_element(ab: Bicomposition, rng: random.Random) -> Permutation:
    """A uniformly random element of S_{α|β}."""
    return _random_set_element(ab.blocks(), ab.n, rng)


def row_stabilizer(t: NumericTableau) -> Iterator[Permutation]:
    """Iterate over R_t; |R_t| = Π λ_i!."""
    return _set_stabilizer(t.rows, t.n)


def column_stabilizer(t: NumericTableau) -> Iterator[Permutation]:
    """Iterate over C_t; |C_t| = Π (λ')_j!."""
    return _set_stabilizer(t.columns(), t.n)


def random_row_element(t: NumericTableau, rng: random.Random) -> Permutation:
    """A uniformly random element of R_t."""
    return _random_set_element(t.rows, t.n, rng)


def random_column_element(t: NumericTableau, rng: random.Random) -> Permutation:
    """A uniformly random element of C_t."""
    return _random_set_element(t.columns(), t.n, rng)


def _value_splits(
    values: tuple[int, ...], parts: tuple[int, ...]
) -> Iterator[list[int]]:
    if not parts:
        yield []
        return
    for chosen in itertools.combinations(values, parts[0]):
        rest = tuple(v for v in values if v not in chosen)
        for tail in _value_splits(rest, parts[1:]):
            yield [*chosen, *tail]


@cache
def distinguished_transversal(ab: Bicomposition) -> Transversal:
    """The left transversal Γ of minimal coset representatives.

    Every representative increases on each block. They are listed in
    lexicographic order of their one-line notation; there are
    n! / Π α_i! Π β_j! of them.
    """
    reps = tuple(
        Permutation(tuple(images))
        for images in _value_splits(tuple(range(1, ab.n + 1)), ab.concatenated)
    )
    young_logger.debug("Γ for (%s) has %d representatives", ab, len(reps))
    return Transversal(reps, YoungSubgroupSpec.from_bicomposition(ab))


def random_transversal(
    ab: Bicomposition, rng: random.Random
) -> tuple[Transversal, list[Permutation]]:
    """A left transversal {d·ξ_d : d ∈ Γ} with random ξ_d ∈ S_{α|β}.

    Returns:
        The transversal (in the order of Γ) and the factors ξ_d.
    """
    gamma = distinguished_transversal(ab)
    factors = [random_young_element(ab, rng) for _ in gamma]
    reps = tuple(d * xi for d, xi in zip(gamma, factors))
    return Transversal(reps, gamma.spec), factors


def coset_decompose(x: Permutation, ab: Bicomposition) -> CosetDecomposition:
    """Write x = d·ξ_α·ξ_β^{+|α|} with d ∈ Γ.

    d carries the images of x sorted within each block; ξ = d^{-1}x then
    stabilizes every block.

    Raises:
        ShapeMismatchError: If x is not in S_n for n = |α| + |β|.
    """
    if x.n != ab.n:
        raise ShapeMismatchError(f"{x} is not in S_{ab.n}")
    d_images = list(x.images)
    xi = [0] * x.n
    for block in ab.blocks():
        values = sorted(x(i) for i in block)
        rank = {v: block.start + k for k, v in enumerate(values)}
        for i, v in zip(block, values):
            d_images[i - 1] = v
        for i in block:
            xi[i - 1] = rank[x(i)]
    a = ab.alpha.n
    return CosetDecomposition(
        Permutation(tuple(d_images)),
        Permutation(tuple(xi[:a])),
        Permutation(tuple(v - a for v in xi[a:])),
    )


def coset_tableau(
    d: Permutation, t0: NumericTableau, ab: Bicomposition
) -> ColorTableau:
    """T_d = d·T_0, i.e. T_d(c) is the colour of d^{-1}(t0(c)).

    T_d = T_{d'} iff d^{-1}d' ∈ S_{α|β}.

    Raises:
        ShapeMismatchError: If t0, d and (α|β) have different sizes.
    """
    if not t0.n == d.n == ab.n:
        raise ShapeMismatchError(
            f"t0 has {t0.n} cells, d ∈ S_{d.n}, (α|β) has n = {ab.n}"
        )
    colors = value_colors(ab)
    inverse = d.inverse()
    return ColorTableau(
        tuple(tuple(colors[inverse(v) - 1] for v in row) for row in t0.rows), ab
    )


def rho(t: NumericTableau, t0: NumericTableau) -> Permutation:
    """ρ_t = t∘t0^{-1}, the permutation with ρ_t·t0 = t.

    Raises:
        InvalidObjectError: If the tableaux have different shapes.
    """
    if t.shape != t0.shape:
        raise InvalidObjectError(f"Shapes differ: {t.shape} and {t0.shape}")
    images = [0] * t.n
    for row0, row in zip(t0.rows, t.rows):
        for v0, v in zip(row0, row):
            images[v0 - 1] = v
    return Permutation(tuple(images))
