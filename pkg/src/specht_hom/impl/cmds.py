"""Implementation of the subcommands.

Every command returns the text written to stdout.

Implements:
- `cmd_enum`: Counts and listings of tableaux of a shape and type.
- `cmd_theta`: The matrices θ̂_𝔡, or the rank of their stack.
- `cmd_hom_dim`: dim Hom(S^λ, M(α|β)) over a field.
- `cmd_verify`: Run a verification suite.
- `cmd_counts`: The |sstd| table over every shape and type of one size.
"""

import csv
import io
import logging

from specht_hom.cli import (
    CountsRequest,
    EnumRequest,
    HomDimRequest,
    OutputFormat,
    ThetaRequest,
    VerifyRequest,
)
from specht_hom.exceptions import CheckFailedError
from specht_hom.hom import theta_matrix
from specht_hom.impl.utils import instance_json, reduce_hom, render
from specht_hom.linalg import FieldKind, hom_dim_oracle, rank, stack_rows
from specht_hom.suite import run_suite
from specht_hom.tableaux import (
    count_standard,
    enumerate_bicompositions,
    enumerate_color_tableaux,
    enumerate_partitions,
    enumerate_semistandard,
)

cmds_logger = logging.getLogger(__name__)

COUNT_COLUMNS = ["shape", "alpha", "beta", "standard", "gamma", "semistandard"]


def cmd_enum(request: EnumRequest, output: OutputFormat) -> str:
    """Counts of standard, type and semistandard tableaux; the sstd listing."""
    shape, ab = request.shape, request.type
    sstd = enumerate_semistandard(shape, ab)
    data = instance_json(shape, ab)
    data["counts"] = {
        "standard": count_standard(shape),
        "tableaux": ab.index(),
        "semistandard": len(sstd),
    }
    data["semistandard"] = [str(t) for t in sstd]
    if request.list_all:
        data["tableaux"] = [str(t) for t in enumerate_color_tableaux(shape, ab)]
    cmds_logger.info("(%s)/(%s): %d semistandard", shape, ab, len(sstd))
    return render(data, output)


def cmd_theta(request: ThetaRequest, output: OutputFormat) -> str:
    """θ̂_𝔡 for every requested 𝔡, or the rank of the stacked matrices.

    Raises:
        NotInRError: If a requested 𝔡 is not in ℛ.
    """
    homs = [
        theta_matrix(rep, request.t0, request.type, request.method)
        for rep in request.reps
    ]
    if request.rank:
        assert request.field is not None
        value = rank(stack_rows(*(h.entries for h in homs)), request.field)
        data = instance_json(request.shape, request.type)
        data.update({"field": str(request.field), "count": len(homs), "rank": value})
        return render(data, output)
    if request.field is not None and request.field.kind is FieldKind.PRIME:
        homs = [reduce_hom(h, request.field) for h in homs]
    if request.all_sstd:
        return render([h.to_json() for h in homs], output)
    return render(homs[0].to_json(), output)


def cmd_hom_dim(request: HomDimRequest, output: OutputFormat) -> str:
    """dim_F Hom_{FS_n}(S^λ_F, M_F(α|β)).

    Raises:
        SizeBoundError: If |Γ| exceeds the bound.
    """
    dim = hom_dim_oracle(request.shape, request.type, request.field, request.bound)
    data = instance_json(request.shape, request.type)
    data.update({"field": str(request.field), "dim": dim})
    return render(data, output)


def cmd_verify(request: VerifyRequest, output: OutputFormat) -> str:
    """The report of a suite run; also written as CSV when requested.

    Raises:
        CheckFailedError: If any check failed; carries the rendered report.
        ValueError: If the suite or a selected check is unknown.
    """
    report = run_suite(request.suite, request.bounds, request.checks)
    if request.csv is not None:
        report.write_csv(request.csv, request.timings)
        cmds_logger.info("Wrote %d checks to %s", len(report.results), request.csv)
    text = render(report.to_json(request.timings), output)
    if not report.passed:
        raise CheckFailedError(
            f"{len(report.failures)} of {len(report.results)} checks failed", text
        )
    return text


def cmd_counts(request: CountsRequest, output: OutputFormat) -> str:
    """One CSV row per (λ, (α|β)); a JSON summary when written to a file."""
    rows = [
        {
            "shape": str(shape),
            "alpha": str(ab.alpha),
            "beta": str(ab.beta),
            "standard": count_standard(shape),
            "gamma": ab.index(),
            "semistandard": len(enumerate_semistandard(shape, ab)),
        }
        for ab in enumerate_bicompositions(request.n)
        for shape in enumerate_partitions(request.n)
    ]
    if request.csv is None:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=COUNT_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")
    with request.csv.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=COUNT_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    cmds_logger.info("Wrote %d rows to %s", len(rows), request.csv)
    return render({"n": request.n, "rows": len(rows), "csv": str(request.csv)}, output)
