"""Results of a verification run.

Implements:
- `CheckResult`: One verified claim on one instance.
- `SuiteReport`: All results of a run, in plan order.
- `record`: Compare an expected and a computed value.
- `tally`: Summarize an exhaustive or sampled property by its failures.
- `canonical_json`: Deterministic JSON text.
"""

import csv
import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml


@dataclass(frozen=True)
class CheckResult:
    """One check on one instance.

    Attributes:
        name: The check.
        instance: What it ran on.
        expected: The expected value, as text.
        computed: The computed value, as text.
        passed: Whether the claim holds.
        elapsed: Wall time in seconds.
    """

    name: str
    instance: str
    expected: str
    computed: str
    passed: bool
    elapsed: float = 0.0

    def to_json(self, timings: bool = False) -> dict[str, Any]:
        """The JSON form; `elapsed` only with timings."""
        out: dict[str, Any] = {
            "name": self.name,
            "instance": self.instance,
            "expected": self.expected,
            "computed": self.computed,
            "passed": self.passed,
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 6)
        return out


@dataclass
class SuiteReport:
    """A verification run.

    Attributes:
        suite: "paper" or "properties".
        seed: The seed every randomized check derives from.
        results: The results, in plan order.
    """

    suite: str
    seed: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        """The failed checks."""
        return [r for r in self.results if not r.passed]

    def to_json(self, timings: bool = False) -> dict[str, Any]:
        """The JSON form."""
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "summary": {"total": len(self.results), "failed": len(self.failures)},
            "checks": [r.to_json(timings) for r in self.results],
        }

    def to_yaml(self, timings: bool = False) -> str:
        """The YAML form, keys in insertion order."""
        return yaml.dump(self.to_json(timings), sort_keys=False, allow_unicode=True)

    def write_csv(self, path: Path, timings: bool = False) -> None:
        """One row per check."""
        columns = ["name", "instance", "expected", "computed", "passed"]
        if timings:
            columns.append("elapsed")
        with path.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=columns)
            writer.writeheader()
            for result in self.results:
                writer.writerow(result.to_json(timings))


def record(
    name: str,
    instance: str,
    expected: object,
    computed: object,
    started: float,
    passed: bool | None = None,
) -> CheckResult:
    """A result that passes iff expected == computed, unless `passed` is given."""
    return CheckResult(
        name,
        instance,
        str(expected),
        str(computed),
        expected == computed if passed is None else passed,
        time.perf_counter() - started,
    )


def tally(
    name: str, instance: str, failures: list[str], total: int, started: float
) -> CheckResult:
    """A result for `total` cases that passes iff no case failed.

    The first failure is quoted in the computed text.
    """
    computed = f"{len(failures)} of {total} failed"
    if failures:
        computed += f"; first: {failures[0]}"
    return CheckResult(
        name,
        instance,
        f"0 of {total} failed",
        computed,
        not failures,
        time.perf_counter() - started,
    )


def canonical_json(data: Any, pretty: bool = False) -> str:
    """JSON with sorted keys; indented when pretty."""
    return json.dumps(
        data, sort_keys=True, indent=4 if pretty else None, ensure_ascii=False
    )
