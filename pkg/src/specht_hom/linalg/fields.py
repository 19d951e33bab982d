"""The coefficient fields Q and F_p.

Implements:
- `FieldKind`: Rationals or a prime field.
- `FieldSpec`: A field with its sympy domain and the reduction k ↦ k^F.
- `is_prime`: Trial division.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any

from sympy.polys.domains import GF, QQ

from specht_hom.exceptions import InvalidObjectError, ParsingError

MAX_PRIME = 2**31


class FieldKind(Enum):
    """The two kinds of field.

    Attributes:
        RATIONALS: Q.
        PRIME: F_p.
    """

    RATIONALS = "q"
    PRIME = "p"


def is_prime(p: int) -> bool:
    """Primality by trial division."""
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Q or F_p.

    Attributes:
        kind: Which field.
        p: The characteristic; 0 for Q.
    """

    kind: FieldKind = FieldKind.RATIONALS
    p: int = 0

    def __post_init__(self) -> None:
        if self.kind is FieldKind.RATIONALS:
            if self.p:
                raise InvalidObjectError("Q has characteristic 0")
        elif not (is_prime(self.p) and self.p < MAX_PRIME):
            raise InvalidObjectError(f"{self.p} is not a prime below 2^31")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        """Q."""
        return cls()

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        """F_p.

        Raises:
            InvalidObjectError: If p is not a prime below 2^31.
        """
        return cls(FieldKind.PRIME, p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse "q"/"Q" or a prime in decimal.

        Raises:
            ParsingError: If the text is neither.
            InvalidObjectError: If the number is not a prime below 2^31.
        """
        stripped = text.strip()
        if stripped.lower() == "q":
            return cls.rationals()
        for k, char in enumerate(stripped):
            if not char.isdigit():
                raise ParsingError(f"Expected 'q' or a prime, got {text!r}", text, k)
        if not stripped:
            raise ParsingError("Empty field", text, 0)
        return cls.prime(int(stripped))

    @property
    def characteristic(self) -> int:
        """char(F)."""
        return self.p

    @property
    def domain(self) -> Any:
        """The sympy domain QQ or GF(p)."""
        return QQ if self.kind is FieldKind.RATIONALS else GF(self.p)

    def reduce(self, k: int) -> int:
        """k^F = k·1_F, as an integer; residues lie in 0..p-1."""
        return k if self.kind is FieldKind.RATIONALS else k % self.p

    def __str__(self) -> str:
        return "Q" if self.kind is FieldKind.RATIONALS else f"F_{self.p}"
