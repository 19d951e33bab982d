import csv
import json

import pytest

from specht_hom.modules import run_in_pool
from specht_hom.suite import (
    SUITES,
    CheckResult,
    SuiteBounds,
    SuiteReport,
    canonical_json,
    load_bounds,
    plan,
    run_suite,
)
from specht_hom.suite.report import record, tally

SMALL = SuiteBounds(
    max_n=3,
    count_max_n=4,
    stab_max_n=4,
    workers=1,
    samples=4,
    trials=10,
    random_a=10,
)


def test_plan_orders_checks_by_registry():
    assert plan("paper") == [("paper", name) for name in SUITES["paper"]]
    everything = plan("all")
    assert len(everything) == len(SUITES["paper"]) + len(SUITES["properties"])
    assert everything[0][0] == "paper"
    assert plan("properties", ["rank_methods"]) == [("properties", "rank_methods")]


def test_plan_rejects_unknown_names():
    with pytest.raises(ValueError):
        plan("nope")
    with pytest.raises(ValueError):
        plan("paper", ["rank_methods"])


def test_bounds_validation():
    with pytest.raises(ValueError):
        SuiteBounds(max_n=-1)
    with pytest.raises(ValueError):
        SuiteBounds(workers=0)
    with pytest.raises(ValueError):
        SuiteBounds().updated({"colour": 1})
    bounds = SuiteBounds().updated({"max_n": 4, "seed": None})
    assert bounds.max_n == 4
    assert bounds.seed == SuiteBounds().seed


def test_load_bounds(tmp_path):
    path = tmp_path / "bounds.yaml"
    path.write_text("max_n: 3\nseed: 7\n", encoding="utf-8")
    assert load_bounds(path) == {"max_n": 3, "seed": 7}
    empty = tmp_path / "empty.yaml"
    empty.write_text("", encoding="utf-8")
    assert load_bounds(empty) == {}
    listing = tmp_path / "list.yaml"
    listing.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_bounds(listing)
    with pytest.raises(FileNotFoundError):
        load_bounds(tmp_path / "missing.yaml")


def test_record_and_tally():
    assert record("x", "i", 1, 1, 0.0).passed
    assert not record("x", "i", 1, 2, 0.0).passed
    assert record("x", "i", "≥ 1", 3, 0.0, passed=True).passed
    failed = tally("t", "i", ["first", "second"], 5, 0.0)
    assert not failed.passed
    assert failed.computed == "2 of 5 failed; first: first"
    assert tally("t", "i", [], 5, 0.0).expected == "0 of 5 failed"


def test_report_serialization(tmp_path):
    results = [
        CheckResult("a", "i", "1", "1", True, 0.5),
        CheckResult("b", "i", "1", "2", False, 0.25),
    ]
    report = SuiteReport("paper", 42, results)
    assert not report.passed
    assert report.failures == results[1:]
    payload = report.to_json()
    assert payload["summary"] == {"total": 2, "failed": 1}
    assert "elapsed" not in payload["checks"][0]
    assert report.to_json(timings=True)["checks"][0]["elapsed"] == 0.5
    path = tmp_path / "report.csv"
    report.write_csv(path)
    with path.open(encoding="utf-8") as handle:
        rows = list(csv.DictReader(handle))
    assert [row["name"] for row in rows] == ["a", "b"]
    assert rows[1]["passed"] == "False"


def test_canonical_json_sorts_keys():
    assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a": [1, 2], "b": 1}'
    assert json.loads(canonical_json({"θ": 1}, pretty=True)) == {"θ": 1}


def test_run_in_pool_keeps_order():
    assert run_in_pool(abs, [-3, 4, -5], 1) == [3, 4, 5]
    assert run_in_pool(abs, [-3, 4, -5], 2) == [3, 4, 5]
    with pytest.raises(ValueError):
        run_in_pool(abs, [1], 0)


@pytest.mark.parametrize(
    "check",
    [
        "semistandard_counts",
        "hook_tableaux",
        "hook_coefficients",
        "hook_gamma_sstd",
        "hook_orbits",
        "hook_dependence",
        "sign_module",
        "theta_one_by_one",
    ],
)
def test_worked_example_checks_pass(check):
    report = run_suite("paper", SMALL, [check])
    assert report.results
    assert report.passed, [r.to_json() for r in report.failures]


@pytest.mark.slow
def test_full_worked_example_suite():
    report = run_suite("paper", SuiteBounds(workers=1, random_a=50))
    assert report.passed, [r.to_json() for r in report.failures]


@pytest.mark.slow
@pytest.mark.parametrize("check", list(SUITES["properties"]))
def test_property_checks_pass_on_small_bounds(check):
    report = run_suite("properties", SMALL, [check])
    assert report.results
    assert report.passed, [r.to_json() for r in report.failures]


def test_runs_are_reproducible():
    first = run_suite("properties", SMALL, ["rank_methods", "counting_identities"])
    second = run_suite("properties", SMALL, ["rank_methods", "counting_identities"])
    assert first.to_json() == second.to_json()
    assert first.passed


def test_structural_caps_only_the_brute_force_sweep():
    bounds = SuiteBounds(max_n=3, brute_max_n=2, workers=1)
    report = run_suite("properties", bounds, ["structural"])
    assert report.passed, [r.to_json() for r in report.failures]
    assert [(r.name, r.instance) for r in report.results] == [
        *[("ℛ, 𝒞 and ∼", f"n = {n}") for n in (1, 2, 3)],
        *[("row moves, d ∉ 𝒞 and Ω", f"n = {n}") for n in (1, 2)],
        ("Γ_sstd ⊆ ℛ ∩ 𝒞 and a ≠ 0 ⇒ ⊵", "n ≤ 3"),
    ]


def test_coset_checks_on_small_bounds():
    report = run_suite(
        "properties", SMALL, ["double_coset_membership", "epsilon_factorizations"]
    )
    assert report.passed, [r.to_json() for r in report.failures]
    scopes = [r.instance for r in report.results]
    assert scopes == ["n = 1", "n = 2", "n = 3", "n ≤ 4"]
    assert report.results[-1].expected == "0 of 10 failed"


@pytest.mark.slow
def test_exhaustive_checks_at_five():
    bounds = SuiteBounds(max_n=5, workers=1, trials=50)
    checks = [
        "double_coset_membership",
        "epsilon_factorizations",
        "coefficient_agreement",
        "theta_methods",
    ]
    report = run_suite("properties", bounds, checks)
    assert report.passed, [r.to_json() for r in report.failures]
    scopes = [r.instance for r in report.results]
    assert scopes[:5] == [f"n = {n}" for n in range(1, 6)]
    assert scopes[5] == "n ≤ 6"


def test_straightening_samples_per_shape_at_six_and_seven():
    bounds = SuiteBounds(max_n=1, samples=2, workers=1)
    report = run_suite("properties", bounds, ["straightening_consistency"])
    assert report.passed, [r.to_json() for r in report.failures]
    sampled = {r.instance: r.expected for r in report.results[1:]}
    assert sampled == {
        "n = 6 sampled": "0 of 22 failed",
        "n = 7 sampled": "0 of 30 failed",
    }
