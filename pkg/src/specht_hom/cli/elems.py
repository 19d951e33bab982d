"""Defines the commands and the limits of the command line interface."""

from enum import Enum

from specht_hom.linalg import DEFAULT_HOM_BOUND
from specht_hom.suite.config import DEFAULT_MAX_N, DEFAULT_SEED

MAX_ENUM_N = 12
SUITE_NAMES = ("paper", "properties", "all")

__all__ = [
    "Command",
    "OutputFormat",
    "DEFAULT_HOM_BOUND",
    "DEFAULT_MAX_N",
    "DEFAULT_SEED",
    "MAX_ENUM_N",
    "SUITE_NAMES",
]


class Command(Enum):
    """Available subcommands of the specht-hom script."""

    ENUM = "enum"
    THETA = "theta"
    HOM_DIM = "hom-dim"
    VERIFY = "verify"
    COUNTS = "counts"


class OutputFormat(Enum):
    """How a result is written to stdout.

    Attributes:
        JSON: Compact JSON with sorted keys.
        PRETTY: Indented JSON with sorted keys.
        YAML: YAML in insertion order.
    """

    JSON = "json"
    PRETTY = "pretty"
    YAML = "yaml"
