"""Permutations of {1, ..., n}.

Implements:
- `Permutation`: An immutable permutation in one-line notation.
"""

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from specht_hom.exceptions import InvalidObjectError, ShapeMismatchError


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation σ of {1, ..., n} with images[i-1] = σ(i).

    Products compose as functions: (σ*τ)(i) = σ(τ(i)).

    Attributes:
        images: The one-line notation.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise InvalidObjectError(f"Not a permutation: {list(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        """The identity of S_n."""
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build σ ∈ S_n from disjoint cycles; (a b c) sends a→b→c→a.

        Raises:
            InvalidObjectError: If the cycles overlap or leave {1..n}.
        """
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            if (
                any(not 1 <= x <= n for x in cycle)
                or len(set(cycle)) != len(cycle)
                or seen & set(cycle)
            ):
                raise InvalidObjectError(f"Invalid cycle {tuple(cycle)} in S_{n}")
            seen.update(cycle)
            for a, b in zip(cycle, (*cycle[1:], cycle[0])):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "Permutation":
        """A uniformly random element of S_n."""
        return cls(tuple(rng.sample(range(1, n + 1), n)))

    @property
    def n(self) -> int:
        """Degree of the permutation."""
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ShapeMismatchError(f"Cannot compose S_{self.n} with S_{other.n}")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        """σ^{-1}."""
        inv = [0] * self.n
        for i, image in enumerate(self.images, 1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    @cached_property
    def sign(self) -> int:
        """sgn(σ) = (-1)^(n - number of cycles)."""
        even_cycles = sum(1 for cycle in self.cycles() if len(cycle) % 2 == 0)
        return -1 if even_cycles % 2 else 1

    def is_identity(self) -> bool:
        """Whether σ fixes every point."""
        return all(i == image for i, image in enumerate(self.images, 1))

    def shift(self, offset: int, n: int) -> "Permutation":
        """σ^{+offset} ∈ S_n: acts as σ on offset+1..offset+deg(σ), fixes the rest."""
        if offset + self.n > n:
            raise ShapeMismatchError(
                f"S_{self.n} shifted by {offset} does not fit in S_{n}"
            )
        images = list(range(1, n + 1))
        for i, image in enumerate(self.images, 1):
            images[offset + i - 1] = offset + image
        return Permutation(tuple(images))

    def restrict(self, block: range) -> "Permutation":
        """σ on a block it stabilizes, renumbered to start at 1.

        Raises:
            InvalidObjectError: If σ does not map the block onto itself.
        """
        offset = block.start - 1
        images = tuple(self(i) - offset for i in block)
        if sorted(images) != list(range(1, len(block) + 1)):
            raise InvalidObjectError(f"{self} does not stabilize {block}")
        return Permutation(images)

    def __str__(self) -> str:
        if self.is_identity():
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())

    def to_json(self) -> list[int]:
        """One-line image array."""
        return list(self.images)
