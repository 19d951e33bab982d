"""Parse and check the command line arguments.

Implements:
- `check_args`: Parse and check the command line.
- `Command`, `OutputFormat`: The subcommands and output formats.
- `EnumRequest`, `ThetaRequest`, `HomDimRequest`, `VerifyRequest`,
    `CountsRequest`, `Request`: The checked arguments.
"""

from specht_hom.cli.cli import (
    CountsRequest,
    EnumRequest,
    HomDimRequest,
    Request,
    ThetaRequest,
    VerifyRequest,
    check_args,
)
from specht_hom.cli.elems import MAX_ENUM_N, Command, OutputFormat
