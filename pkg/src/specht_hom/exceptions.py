"""Custom exceptions for the specht_hom package."""


class SpechtHomError(Exception):
    """Base class for exceptions in this package.
    Exists, so that it can be distinguished from other exceptions."""


class ParsingError(ValueError, SpechtHomError):
    """Parsing of a shape, type, permutation, tableau or field failed.

    Attributes:
        text: The text that could not be parsed.
        position: Index of the first offending character.
    """

    def __init__(self, message: str, text: str, position: int = 0) -> None:
        super().__init__(f"{message} (at position {position} in {text!r})")
        self.text = text
        self.position = position


class InvalidObjectError(ValueError, SpechtHomError):
    """A value violates the invariants of its type."""


class ShapeMismatchError(ValueError, SpechtHomError):
    """Sizes of a shape, a type, a tableau or a permutation do not agree."""


class NotInRError(SpechtHomError):
    """The representative is not in the set ℛ."""


class NotInDoubleCosetError(SpechtHomError):
    """The permutation is not in the double coset R_{t0}·𝔡·S_{α|β}."""


class SizeBoundError(SpechtHomError):
    """A configured size bound was exceeded."""


class CheckFailedError(SpechtHomError):
    """At least one check of a verification run failed.

    Attributes:
        output: The rendered report, still written to stdout.
    """

    def __init__(self, message: str, output: str = "") -> None:
        super().__init__(message)
        self.output = output
