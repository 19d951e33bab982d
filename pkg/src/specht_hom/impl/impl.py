"""Implementation of the commands.

Implements:
- `run_cmd`: Run a checked command and return its output.
- `IMPLEMENTATIONS`: A dictionary of the command implementations.
"""

import logging
from collections.abc import Callable
from typing import Any

from specht_hom.cli import Command, OutputFormat, Request
from specht_hom.impl.cmds import (
    cmd_counts,
    cmd_enum,
    cmd_hom_dim,
    cmd_theta,
    cmd_verify,
)

impl_logger = logging.getLogger(__name__)

IMPLEMENTATIONS: dict[Command, Callable[[Any, OutputFormat], str]] = {
    Command.ENUM: cmd_enum,
    Command.THETA: cmd_theta,
    Command.HOM_DIM: cmd_hom_dim,
    Command.VERIFY: cmd_verify,
    Command.COUNTS: cmd_counts,
}


def run_cmd(cmd: Command, request: Request, output: OutputFormat) -> str:
    """Run `cmd` on its checked arguments and return the text for stdout."""
    impl_logger.debug("CMD: %s ARGS: %s", cmd.value, request)

    func = IMPLEMENTATIONS[cmd]
    return func(request, output)
