"""Planning and running a verification suite.

Implements:
- `SUITES`: Suite name → its check registry.
- `plan`: The (suite, check) items of a run, in canonical order.
- `run_suite`: Run every item on a process pool and collect a `SuiteReport`.
"""

import logging
import time
from collections.abc import Callable

from specht_hom.modules import default_workers, run_in_pool
from specht_hom.suite.config import SuiteBounds
from specht_hom.suite.properties import PROPERTY_CHECKS
from specht_hom.suite.report import CheckResult, SuiteReport
from specht_hom.suite.worked import WORKED_CHECKS

suite_logger = logging.getLogger(__name__)

SUITES: dict[str, dict[str, Callable[[SuiteBounds], list[CheckResult]]]] = {
    "paper": WORKED_CHECKS,
    "properties": PROPERTY_CHECKS,
}

Item = tuple[str, str, SuiteBounds]


def plan(suite: str, only: list[str] | None = None) -> list[tuple[str, str]]:
    """The checks of `suite` ("paper", "properties" or "all") in registry order.

    Raises:
        ValueError: If the suite or one of the `only` checks is unknown.
    """
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(f"Unknown suite {suite!r}; use one of {[*SUITES, 'all']}")
    items = [(name, check) for name in names for check in SUITES[name]]
    if only:
        known = {check for _, check in items}
        unknown = sorted(set(only) - known)
        if unknown:
            raise ValueError(f"Unknown checks for suite {suite!r}: {unknown}")
        items = [(name, check) for name, check in items if check in only]
    return items


def _run_item(item: Item) -> list[CheckResult]:
    suite, check, bounds = item
    started = time.perf_counter()
    results = SUITES[suite][check](bounds)
    suite_logger.info(
        "%s/%s: %d results in %.2fs",
        suite,
        check,
        len(results),
        time.perf_counter() - started,
    )
    return results


def run_suite(
    suite: str, bounds: SuiteBounds, only: list[str] | None = None
) -> SuiteReport:
    """Run a suite; the report lists results in plan order.

    Raises:
        ValueError: If the suite or a selected check is unknown.
    """
    items = [(name, check, bounds) for name, check in plan(suite, only)]
    workers = bounds.workers or default_workers()
    suite_logger.info(
        "Running %d checks of %s on %d workers (seed %d)",
        len(items),
        suite,
        workers,
        bounds.seed,
    )
    chunks = run_in_pool(_run_item, items, workers)
    report = SuiteReport(suite, bounds.seed, [r for chunk in chunks for r in chunk])
    for failure in report.failures:
        suite_logger.warning(
            "%s on %s: expected %s, computed %s",
            failure.name,
            failure.instance,
            failure.expected,
            failure.computed,
        )
    return report
