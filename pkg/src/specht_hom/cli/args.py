"""Actual parsing of the command line arguments.

Implements:
- `CommonArgs`: Arguments shared by every subcommand.
- `EnumArgs`, `ThetaArgs`, `HomDimArgs`, `VerifyArgs`, `CountsArgs`: The
    parsed arguments of each subcommand.
- `parse_args`: Parse the command line.
"""

import argparse
from pathlib import Path

from specht_hom.cli.elems import (
    DEFAULT_HOM_BOUND,
    DEFAULT_MAX_N,
    DEFAULT_SEED,
    SUITE_NAMES,
    Command,
    OutputFormat,
)


class CommonArgs(argparse.Namespace):
    """The arguments every subcommand takes.

    Attributes:
        command (str): The subcommand.
        verbose (int): The verbosity level.
        output (str): "json", "pretty" or "yaml".
    """

    command: str
    verbose: int
    output: str


class EnumArgs(CommonArgs):
    """The parsed enum arguments.

    Attributes:
        shape (str): λ, e.g. "2,2,1".
        type (str): (α|β), e.g. "2|2,1".
        list_all (bool): Also list every tableau of the type.
    """

    shape: str
    type: str
    list_all: bool


class ThetaArgs(CommonArgs):
    """The parsed theta arguments.

    Attributes:
        shape (str): λ.
        type (str): (α|β).
        rep (str | None): An index into Γ, "[images]" or "(cycles)".
        all_sstd (bool): Build θ̂_𝔡 for every 𝔡 ∈ Γ_sstd.
        field (str | None): "q" or a prime.
        rank (bool): Print the rank of the stacked matrices instead.
        t0 (str | None): An explicit tableau t_0.
        direct (bool): Compute every entry without the a-table.
    """

    shape: str
    type: str
    rep: str | None
    all_sstd: bool
    field: str | None
    rank: bool
    t0: str | None
    direct: bool


class HomDimArgs(CommonArgs):
    """The parsed hom-dim arguments.

    Attributes:
        shape (str): λ.
        type (str): (α|β).
        field (str): "q" or a prime.
        bound (int): The largest |Γ| accepted.
    """

    shape: str
    type: str
    field: str
    bound: int


class VerifyArgs(CommonArgs):
    """The parsed verify arguments.

    Attributes:
        suite (str): "paper", "properties" or "all".
        checks (list[str] | None): Only run these checks.
        max_n (int | None): Largest n of the exhaustive sweeps.
        seed (int | None): Seed of the randomized checks.
        workers (int | None): Pool size.
        config (Path | None): YAML file of suite bounds.
        timings (bool): Report the elapsed time of every check.
        csv (Path | None): Also write the checks as CSV.
    """

    suite: str
    checks: list[str] | None
    max_n: int | None
    seed: int | None
    workers: int | None
    config: Path | None
    timings: bool
    csv: Path | None


class CountsArgs(CommonArgs):
    """The parsed counts arguments.

    Attributes:
        n (int): The size of the shapes and types.
        csv (Path | None): Write the table to this file instead of stdout.
    """

    n: int
    csv: Path | None


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v", "--verbose", action="count", help="Verbosity level", default=0
    )
    output = common.add_mutually_exclusive_group()
    output.add_argument(
        "--json",
        action="store_const",
        const=OutputFormat.JSON.value,
        dest="output",
        help="Compact JSON with sorted keys (default).",
    )
    output.add_argument(
        "--pretty",
        action="store_const",
        const=OutputFormat.PRETTY.value,
        dest="output",
        help="Indented JSON with sorted keys.",
    )
    output.add_argument(
        "--yaml",
        action="store_const",
        const=OutputFormat.YAML.value,
        dest="output",
        help="YAML output.",
    )
    common.set_defaults(output=OutputFormat.JSON.value)
    return common


def _add_instance(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--shape",
        "-s",
        type=str,
        help='The partition λ, e.g. "2,2,1" or "2,1^5".',
        required=True,
    )
    parser.add_argument(
        "--type",
        "-t",
        type=str,
        help='The bicomposition (α|β), e.g. "2|2,1" or "|3,2,2".',
        required=True,
    )


def parse_args(argv: list[str] | None = None) -> CommonArgs:
    """Return the parsed arguments of one subcommand."""
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="specht-hom",
        description=(
            "Homomorphisms from integral Specht modules to signed Young"
            " permutation modules."
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    enum = subparsers.add_parser(
        Command.ENUM.value,
        parents=[common],
        help="Count and list the tableaux of a shape and type.",
    )
    _add_instance(enum)
    enum.add_argument(
        "--all",
        action="store_true",
        dest="list_all",
        help="Also list every tableau of the type, not only the semistandard ones.",
    )

    theta = subparsers.add_parser(
        Command.THETA.value,
        parents=[common],
        help="Build the matrix of θ̂_𝔡.",
    )
    _add_instance(theta)
    which = theta.add_mutually_exclusive_group(required=True)
    which.add_argument(
        "--rep",
        "-r",
        type=str,
        help='𝔡 as an index into Γ, "[images]" or "(cycles)".',
    )
    which.add_argument(
        "--all-sstd",
        action="store_true",
        help="Every 𝔡 with T_𝔡 semistandard.",
    )
    theta.add_argument(
        "--field",
        "-f",
        type=str,
        help='"q" or a prime; entries are reduced mod p.',
    )
    theta.add_argument(
        "--rank",
        action="store_true",
        help="Print the rank of the stacked matrices over the field.",
    )
    theta.add_argument(
        "--t0",
        type=str,
        help='An explicit tableau t_0, e.g. "1,7/2/3/4/5/6".',
    )
    theta.add_argument(
        "--direct",
        action="store_true",
        help="Compute every entry from its own orbit sum.",
    )

    hom_dim = subparsers.add_parser(
        Command.HOM_DIM.value,
        parents=[common],
        help="dim Hom(S^λ, M(α|β)) over a field, from the equivariance system.",
    )
    _add_instance(hom_dim)
    hom_dim.add_argument(
        "--field", "-f", type=str, help='"q" or a prime.', default="q"
    )
    hom_dim.add_argument(
        "--bound",
        type=int,
        help=f"The largest |Γ| accepted. Defaults to {DEFAULT_HOM_BOUND}.",
        default=DEFAULT_HOM_BOUND,
    )

    verify = subparsers.add_parser(
        Command.VERIFY.value,
        parents=[common],
        help="Run a verification suite.",
    )
    verify.add_argument(
        "--suite", choices=SUITE_NAMES, help="The suite to run.", default="paper"
    )
    verify.add_argument(
        "--check",
        action="append",
        dest="checks",
        help="Only run this check. May be repeated.",
    )
    verify.add_argument(
        "--max-n",
        type=int,
        help=f"Largest n of the exhaustive sweeps. Defaults to {DEFAULT_MAX_N}.",
    )
    verify.add_argument(
        "--seed",
        type=int,
        help=f"Seed of the randomized checks. Defaults to {DEFAULT_SEED}.",
    )
    verify.add_argument(
        "--workers",
        "-j",
        type=int,
        help="Number of worker processes. Defaults to the physical core count.",
    )
    verify.add_argument(
        "--config",
        "-c",
        type=Path,
        help="A YAML mapping of suite bounds; flags take precedence.",
    )
    verify.add_argument(
        "--timings",
        action="store_true",
        help="Report the elapsed time of every check.",
    )
    verify.add_argument("--csv", type=Path, help="Also write the checks as CSV.")

    counts = subparsers.add_parser(
        Command.COUNTS.value,
        parents=[common],
        help="Table of semistandard counts over all shapes and types of size n.",
    )
    counts.add_argument("--n", "-n", type=int, help="The size n.", required=True)
    counts.add_argument(
        "--csv", type=Path, help="Write the table to this file instead of stdout."
    )

    args: CommonArgs = parser.parse_args(argv)  # type: ignore[assignment]
    return args
