"""Parse and check the command line arguments.

Implements:
- `EnumRequest`, `ThetaRequest`, `HomDimRequest`, `VerifyRequest`,
    `CountsRequest`: Checked arguments of each subcommand.
- `check_enum_args`, `check_theta_args`, `check_hom_dim_args`,
    `check_verify_args`, `check_counts_args`: Check the arguments of one
    subcommand.
- `check_args`: Parse and check the command line.
"""

import logging
from pathlib import Path
from typing import NamedTuple

from specht_hom.cli.args import (
    CommonArgs,
    CountsArgs,
    EnumArgs,
    HomDimArgs,
    ThetaArgs,
    VerifyArgs,
    parse_args,
)
from specht_hom.cli.elems import MAX_ENUM_N, Command, OutputFormat
from specht_hom.exceptions import ShapeMismatchError, SizeBoundError
from specht_hom.group import Permutation, distinguished_transversal
from specht_hom.hom import ThetaMethod, gamma_sstd
from specht_hom.linalg import FieldSpec
from specht_hom.modules import set_log_level
from specht_hom.parser import (
    parse_bicomposition,
    parse_field,
    parse_partition,
    parse_permutation,
    parse_tableau,
)
from specht_hom.suite import SuiteBounds, load_bounds
from specht_hom.tableaux import (
    Bicomposition,
    NumericTableau,
    Partition,
    initial_tableau,
)

cli_logger = logging.getLogger(__name__)


class EnumRequest(NamedTuple):
    """A checked enum command."""

    shape: Partition
    type: Bicomposition
    list_all: bool


class ThetaRequest(NamedTuple):
    """A checked theta command.

    Attributes:
        shape: λ.
        type: (α|β).
        t0: The fixed tableau.
        reps: The 𝔡 to build θ̂_𝔡 for.
        field: Reduce entries (or take the rank) over this field, if given.
        rank: Report the rank of the stacked matrices.
        method: How the entries are computed.
        all_sstd: Whether `reps` is Γ_sstd.
    """

    shape: Partition
    type: Bicomposition
    t0: NumericTableau
    reps: list[Permutation]
    field: FieldSpec | None
    rank: bool
    method: ThetaMethod
    all_sstd: bool


class HomDimRequest(NamedTuple):
    """A checked hom-dim command."""

    shape: Partition
    type: Bicomposition
    field: FieldSpec
    bound: int


class VerifyRequest(NamedTuple):
    """A checked verify command.

    Attributes:
        suite: "paper", "properties" or "all".
        bounds: The merged suite bounds.
        checks: Only these checks, or all of the suite.
        timings: Report elapsed times.
        csv: Also write the checks here.
    """

    suite: str
    bounds: SuiteBounds
    checks: list[str] | None
    timings: bool
    csv: Path | None


class CountsRequest(NamedTuple):
    """A checked counts command."""

    n: int
    csv: Path | None


Request = EnumRequest | ThetaRequest | HomDimRequest | VerifyRequest | CountsRequest


def _parse_verbosity(verbose: int) -> None:
    """Set the log level for the specht_hom package.

    Args:
        verbose (int): The verbosity level.
            (0: WARNING, 1: INFO, >1: DEBUG)

    Raises:
        ValueError: If the verbosity level is invalid.
    """
    if verbose == 0:
        level = logging.WARNING
    elif verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    else:
        raise ValueError("Invalid verbosity level.")

    set_log_level(level, only_pkg=True)


def _check_size(n: int) -> None:
    """Raise `SizeBoundError` for enumeration beyond `MAX_ENUM_N`."""
    if n > MAX_ENUM_N:
        raise SizeBoundError(f"n = {n} exceeds the enumeration limit {MAX_ENUM_N}")


def _check_instance(
    shape_text: str, type_text: str
) -> tuple[Partition, Bicomposition]:
    """Parse λ and (α|β) and check that their sizes agree.

    Raises:
        ParsingError: On malformed text.
        ShapeMismatchError: If |λ| differs from the size of (α|β).
    """
    shape = parse_partition(shape_text)
    ab = parse_bicomposition(type_text)
    if shape.n != ab.n:
        raise ShapeMismatchError(
            f"|λ| = {shape.n} but (α|β) = ({ab}) has n = {ab.n}"
        )
    return shape, ab


def _check_output_file(path: Path | None) -> Path | None:
    """Resolve `path`; its folder must exist.

    Raises:
        FileNotFoundError: If the folder does not exist.
    """
    if path is None:
        return None
    path = path.expanduser().absolute()
    if not path.parent.is_dir():
        raise FileNotFoundError(f"Folder {path.parent} does not exist.")
    return path


def check_enum_args(args: EnumArgs) -> EnumRequest:
    """Check the enum arguments.

    Raises:
        ParsingError: On malformed text.
        ShapeMismatchError: If the sizes disagree.
        SizeBoundError: If n exceeds the enumeration limit.
    """
    shape, ab = _check_instance(args.shape, args.type)
    _check_size(shape.n)
    return EnumRequest(shape, ab, args.list_all)


def check_theta_args(args: ThetaArgs) -> ThetaRequest:
    """Check the theta arguments.

    Raises:
        ParsingError: On malformed text.
        ShapeMismatchError: If the sizes or the shape of t_0 disagree.
        SizeBoundError: If n exceeds the enumeration limit.
    """
    shape, ab = _check_instance(args.shape, args.type)
    _check_size(shape.n)
    if args.t0 is None:
        t0 = initial_tableau(shape)
    else:
        t0 = parse_tableau(args.t0)
        if t0.shape != shape:
            raise ShapeMismatchError(f"t0 = {args.t0} does not have shape {shape}")
    if args.all_sstd:
        reps = gamma_sstd(ab, t0)
        cli_logger.info("Γ_sstd has %d elements", len(reps))
    else:
        assert args.rep is not None
        reps = [parse_permutation(args.rep, ab.n, distinguished_transversal(ab))]
    field = parse_field(args.field) if args.field is not None else None
    if args.rank and field is None:
        field = FieldSpec.rationals()
    method = ThetaMethod.DIRECT if args.direct else ThetaMethod.TABLE
    return ThetaRequest(shape, ab, t0, reps, field, args.rank, method, args.all_sstd)


def check_hom_dim_args(args: HomDimArgs) -> HomDimRequest:
    """Check the hom-dim arguments.

    Raises:
        ParsingError: On malformed text.
        ShapeMismatchError: If the sizes disagree.
        ValueError: If the bound is not positive.
    """
    shape, ab = _check_instance(args.shape, args.type)
    if args.bound < 1:
        raise ValueError(f"The bound must be positive, got {args.bound}")
    return HomDimRequest(shape, ab, parse_field(args.field), args.bound)


def check_verify_args(args: VerifyArgs) -> VerifyRequest:
    """Check the verify arguments; flags override the config file.

    Raises:
        FileNotFoundError: If the config file or the CSV folder is missing.
        ValueError: On unknown or invalid bounds.
    """
    bounds = SuiteBounds()
    if args.config is not None:
        bounds = bounds.updated(load_bounds(args.config))
    bounds = bounds.updated(
        {"max_n": args.max_n, "seed": args.seed, "workers": args.workers}
    )
    cli_logger.debug("Suite bounds: %s", bounds)
    return VerifyRequest(
        args.suite, bounds, args.checks, args.timings, _check_output_file(args.csv)
    )


def check_counts_args(args: CountsArgs) -> CountsRequest:
    """Check the counts arguments.

    Raises:
        ValueError: If n is negative.
        SizeBoundError: If n exceeds the enumeration limit.
        FileNotFoundError: If the CSV folder is missing.
    """
    if args.n < 0:
        raise ValueError(f"n must be nonnegative, got {args.n}")
    _check_size(args.n)
    return CountsRequest(args.n, _check_output_file(args.csv))


def check_args(
    argv: list[str] | None = None,
) -> tuple[Command, OutputFormat, Request]:
    """Parse and check the command line.

    Returns:
        The subcommand, the output format and the checked arguments.

    Raises:
        ValueError: If the arguments are invalid.
        FileNotFoundError: If a file is not found.
        SizeBoundError: If an enumeration limit is exceeded.
    """
    args: CommonArgs = parse_args(argv)

    _parse_verbosity(args.verbose)

    command = Command(args.command)
    output = OutputFormat(args.output)
    request: Request
    if command is Command.ENUM:
        request = check_enum_args(args)  # type: ignore[arg-type]
    elif command is Command.THETA:
        request = check_theta_args(args)  # type: ignore[arg-type]
    elif command is Command.HOM_DIM:
        request = check_hom_dim_args(args)  # type: ignore[arg-type]
    elif command is Command.VERIFY:
        request = check_verify_args(args)  # type: ignore[arg-type]
    else:
        request = check_counts_args(args)  # type: ignore[arg-type]
    cli_logger.debug("Command %s: %s", command.value, request)
    return command, output, request
