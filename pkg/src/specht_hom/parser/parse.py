"""Parsing of the textual forms used on the command line.

Implements:
- `parse_composition`: "3,2,2", "2,1^5" or "" for ∅.
- `parse_partition`: A composition that is weakly decreasing.
- `parse_bicomposition`: "α|β", e.g. "2|2,1" or "|3,2,2".
- `parse_permutation`: An index into Γ, an image list "[2,1,3]" or cycles "(1 2)(3 4)".
- `parse_tableau`: Rows separated by "/", entries by ",", e.g. "1,2/3".
- `parse_field`: "q" or a prime.
"""

import logging
import re
from collections.abc import Sequence

from specht_hom.exceptions import InvalidObjectError, ParsingError
from specht_hom.group import Permutation
from specht_hom.linalg import FieldSpec
from specht_hom.tableaux import Bicomposition, Composition, NumericTableau, Partition

parse_logger = logging.getLogger(__name__)

PART_PATTERN = re.compile(r"\s*(\d+)(?:\^(\d+))?\s*")
CYCLE_PATTERN = re.compile(r"\(([\d\s,]*)\)")


def _first_bad(text: str, allowed: str) -> int:
    return next((k for k, char in enumerate(text) if char not in allowed), len(text))


def _parse_parts(text: str, offset: int, full: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    parts: list[int] = []
    position = offset
    for chunk in text.split(","):
        match = PART_PATTERN.fullmatch(chunk)
        if match is None:
            bad = _first_bad(chunk, " 0123456789^")
            raise ParsingError("Expected a part such as 3 or 1^5", full, position + bad)
        value, power = int(match.group(1)), int(match.group(2) or 1)
        if not value:
            raise ParsingError(
                "Parts must be positive", full, position + match.start(1)
            )
        parts.extend([value] * power)
        position += len(chunk) + 1
    return tuple(parts)


def parse_composition(text: str) -> Composition:
    """Parse a composition; "a^k" repeats the part a k times.

    Raises:
        ParsingError: On a malformed part.
    """
    return Composition(_parse_parts(text, 0, text))


def parse_partition(text: str) -> Partition:
    """Parse a partition such as "2,2,1" or "2,1^5".

    Raises:
        ParsingError: On a malformed part or increasing parts.
    """
    parts = _parse_parts(text, 0, text)
    try:
        return Partition(parts)
    except InvalidObjectError as e:
        raise ParsingError(str(e), text, 0) from e


def parse_bicomposition(text: str) -> Bicomposition:
    """Parse "α|β"; either side may be empty.

    Raises:
        ParsingError: If there is not exactly one "|" or a side is malformed.
    """
    if text.count("|") != 1:
        position = text.find("|", text.find("|") + 1) if "|" in text else len(text)
        raise ParsingError("Expected exactly one '|' between α and β", text, position)
    left, right = text.split("|")
    alpha = _parse_parts(left, 0, text)
    beta = _parse_parts(right, len(left) + 1, text)
    return Bicomposition(Composition(alpha), Composition(beta))


def _parse_images(text: str, n: int) -> Permutation:
    inner = text.strip()[1:-1]
    offset = text.index("[") + 1
    if not inner.strip():
        images: list[int] = []
    else:
        bad = _first_bad(inner, " ,0123456789")
        if bad < len(inner):
            raise ParsingError("Image lists hold integers only", text, offset + bad)
        images = [int(v) for v in inner.split(",") if v.strip()]
    if len(images) != n:
        raise ParsingError(f"Expected {n} images, got {len(images)}", text, offset)
    try:
        return Permutation(tuple(images))
    except InvalidObjectError as e:
        raise ParsingError(str(e), text, offset) from e


def _parse_cycles(text: str, n: int) -> Permutation:
    stripped = text.strip()
    start = len(text) - len(text.lstrip())
    cycles: list[list[int]] = []
    position = 0
    for match in CYCLE_PATTERN.finditer(stripped):
        gap = stripped[position : match.start()]
        if gap.strip():
            raise ParsingError("Expected a cycle", text, start + position)
        values = re.split(r"[\s,]+", match.group(1).strip())
        cycles.append([int(v) for v in values if v])
        position = match.end()
    if stripped[position:].strip():
        raise ParsingError("Expected a cycle", text, start + position)
    try:
        return Permutation.from_cycles(n, [c for c in cycles if len(c) > 1])
    except InvalidObjectError as e:
        raise ParsingError(str(e), text, start) from e


def parse_permutation(
    text: str, n: int, transversal: Sequence[Permutation] | None = None
) -> Permutation:
    """Parse a permutation of S_n.

    Args:
        text (str): A 0-based index into `transversal`, an image list "[2,1,3]"
            or a product of disjoint cycles "(1 2)(3 4)"; "()" is the identity.
        n (int): The degree.
        transversal (Sequence[Permutation] | None): Lookup for indices.

    Raises:
        ParsingError: On malformed text, a bad index or a non-permutation.
    """
    stripped = text.strip()
    if stripped.startswith("["):
        if not stripped.endswith("]"):
            raise ParsingError("Unclosed image list", text, len(text))
        return _parse_images(text, n)
    if stripped.startswith("("):
        return _parse_cycles(text, n)
    if stripped.isdigit():
        if transversal is None:
            raise ParsingError("An index needs a transversal", text, 0)
        index = int(stripped)
        if index >= len(transversal):
            raise ParsingError(
                f"Index out of range for |Γ| = {len(transversal)}", text, 0
            )
        parse_logger.debug("Index %d resolves to %s", index, transversal[index])
        return transversal[index]
    raise ParsingError(
        "Expected an index, [images] or (cycles)", text, _first_bad(text, " ")
    )


def parse_tableau(text: str) -> NumericTableau:
    """Parse "1,2/3" into a numeric tableau.

    Raises:
        ParsingError: On malformed text or if the entries do not form a
            bijective tableau of a partition shape.
    """
    bad = _first_bad(text, " ,/0123456789")
    if bad < len(text):
        raise ParsingError("Tableaux hold integers, ',' and '/' only", text, bad)
    try:
        rows = [[int(v) for v in row.split(",")] for row in text.split("/")]
    except ValueError as e:
        raise ParsingError("Empty entry in tableau", text, 0) from e
    try:
        return NumericTableau.from_lists(rows)
    except InvalidObjectError as e:
        raise ParsingError(str(e), text, 0) from e


def parse_field(text: str) -> FieldSpec:
    """Parse "q" or a prime p < 2^31.

    Raises:
        ParsingError: On anything else.
    """
    try:
        return FieldSpec.parse(text)
    except InvalidObjectError as e:
        raise ParsingError(str(e), text, 0) from e
