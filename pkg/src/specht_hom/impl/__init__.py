"""Implementation of the command routines.

Implements:
- `run_cmd`: Run a checked command and return its output.
- `IMPLEMENTATIONS`: A dictionary of the command implementations.
- `cmd_enum`, `cmd_theta`, `cmd_hom_dim`, `cmd_verify`, `cmd_counts`: The
    commands.
- `render`: Serialize a result in the requested format.
"""

from specht_hom.impl.cmds import (
    cmd_counts,
    cmd_enum,
    cmd_hom_dim,
    cmd_theta,
    cmd_verify,
)
from specht_hom.impl.impl import IMPLEMENTATIONS, run_cmd
from specht_hom.impl.utils import render
