"""The verification suite.

- `SuiteBounds`, `load_bounds`: Bounds of a run.
- `CheckResult`, `SuiteReport`, `canonical_json`: Results.
- `SUITES`, `plan`, `run_suite`: Running the checks on a process pool.
- `Instance`: Fixed instances with known answers.
"""

from specht_hom.suite.config import (
    DEFAULT_MAX_N,
    DEFAULT_SEED,
    SuiteBounds,
    load_bounds,
)
from specht_hom.suite.instances import Instance
from specht_hom.suite.report import CheckResult, SuiteReport, canonical_json
from specht_hom.suite.runner import SUITES, plan, run_suite
