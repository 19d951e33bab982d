"""Bounds of a verification run.

Implements:
- `SuiteBounds`: Sizes, seeds and sample counts of the checks.
- `load_bounds`: Read a YAML mapping of bounds.
- `DEFAULT_SEED`, `DEFAULT_MAX_N`: Defaults of the two most used bounds.
"""

import dataclasses
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import yaml

config_logger = logging.getLogger(__name__)

DEFAULT_SEED = 42
DEFAULT_MAX_N = 5


@dataclass(frozen=True)
class SuiteBounds:
    """Bounds of a verification run.

    Attributes:
        max_n: Largest n for the exhaustive sweeps over shapes and types.
        count_max_n: Largest n for the counting identities.
        stab_max_n: Largest n for a_{𝔡,𝔡} = |stab|.
        brute_max_n: Largest n for the brute-force Ω, d ∉ 𝒞 vanishing and
            row-move sweeps.
        seed: Seed of every randomized check.
        workers: Pool size; None means the physical core count.
        hom_bound: Largest |Γ| handed to the Hom-dimension oracle.
        samples: Sampled tableaux per instance; twice as many random
            matrices for the rank comparison.
        trials: Randomized trials for the sign-equivariance check.
        random_a: Random d for the coefficient-membership check.
    """

    max_n: int = DEFAULT_MAX_N
    count_max_n: int = 6
    stab_max_n: int = 6
    brute_max_n: int = 4
    seed: int = DEFAULT_SEED
    workers: int | None = None
    hom_bound: int = 400
    samples: int = 50
    trials: int = 200
    random_a: int = 500

    def __post_init__(self) -> None:
        for bound in dataclasses.fields(self):
            value = getattr(self, bound.name)
            if bound.name in ("seed", "workers"):
                continue
            if not isinstance(value, int) or value < 0:
                raise ValueError(
                    f"{bound.name} must be a nonnegative integer: {value!r}"
                )
        if self.workers is not None and self.workers < 1:
            raise ValueError(f"workers must be positive: {self.workers}")

    def updated(self, values: dict[str, Any]) -> "SuiteBounds":
        """A copy with the non-None values replaced.

        Raises:
            ValueError: On an unknown key or an invalid value.
        """
        known = {f.name for f in dataclasses.fields(self)}
        unknown = sorted(set(values) - known)
        if unknown:
            raise ValueError(f"Unknown suite bounds: {', '.join(unknown)}")
        return dataclasses.replace(
            self, **{k: v for k, v in values.items() if v is not None}
        )


def load_bounds(path: Path) -> dict[str, Any]:
    """Read the YAML mapping of bounds in `path`.

    Raises:
        FileNotFoundError: If the file does not exist.
        ValueError: If it does not hold a mapping.
    """
    path = path.expanduser().absolute()
    if not path.is_file():
        raise FileNotFoundError(f"{path} not found.")
    content = yaml.safe_load(path.read_text("utf-8"))
    if content is None:
        return {}
    if not isinstance(content, dict):
        raise ValueError(f"{path} must hold a mapping of bounds")
    config_logger.info("Suite bounds from %s: %s", path, content)
    return content
