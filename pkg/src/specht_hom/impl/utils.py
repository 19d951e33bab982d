"""Helpers shared by the command implementations.

Implements:
- `render`: Serialize a result in the requested format.
- `instance_json`: The JSON form of λ and (α|β).
- `reduce_hom`: A HomMatrix with entries reduced into a field.
"""

import dataclasses
from typing import Any

import yaml

from specht_hom.cli import OutputFormat
from specht_hom.hom import HomMatrix
from specht_hom.linalg import FieldSpec
from specht_hom.suite import canonical_json
from specht_hom.tableaux import Bicomposition, Partition


def render(data: Any, output: OutputFormat) -> str:
    """Deterministic text for `data`: sorted-key JSON or YAML."""
    if output is OutputFormat.YAML:
        return yaml.dump(data, sort_keys=False, allow_unicode=True).rstrip("\n")
    return canonical_json(data, pretty=output is OutputFormat.PRETTY)


def instance_json(shape: Partition, ab: Bicomposition) -> dict[str, Any]:
    """{"shape": [...], "type": {"alpha": [...], "beta": [...]}}."""
    return {
        "shape": list(shape.parts),
        "type": {"alpha": list(ab.alpha.parts), "beta": list(ab.beta.parts)},
    }


def reduce_hom(hom: HomMatrix, field: FieldSpec) -> HomMatrix:
    """`hom` with every entry k replaced by k^F."""
    return dataclasses.replace(
        hom,
        entries=tuple(tuple(field.reduce(v) for v in row) for row in hom.entries),
    )
