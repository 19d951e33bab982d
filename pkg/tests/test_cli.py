import json

import pytest
import yaml

from specht_hom.cli import Command, OutputFormat, ThetaRequest, check_args
from specht_hom.hom import ThetaMethod
from specht_hom.linalg import FieldSpec
from specht_hom.main import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main
from specht_hom.suite import worked

HOOK_ARGS = ["-s", "2,1^5", "-t", "|3,2,2", "--t0", "1,7/2/3/4/5/6"]


def _run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_check_args_theta_defaults():
    cmd, output, request = check_args(["theta", "-s", "2,1", "-t", "2|1", "-r", "0"])
    assert cmd is Command.THETA
    assert output is OutputFormat.JSON
    assert isinstance(request, ThetaRequest)
    assert request.t0.rows == ((1, 2), (3,))
    assert request.method is ThetaMethod.TABLE
    assert request.field is None
    assert len(request.reps) == 1


def test_check_args_rank_defaults_to_rationals():
    _, _, request = check_args(["theta", *HOOK_ARGS, "--all-sstd", "--rank"])
    assert request.field == FieldSpec.rationals()
    assert len(request.reps) == 2


def test_enum(capsys):
    code, out = _run(capsys, ["enum", "-s", "2,2,1", "-t", "2|2,1"])
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["counts"] == {"standard": 5, "tableaux": 30, "semistandard": 1}
    assert data["semistandard"] == ["c1,c1/d1,d2/d1"]
    assert "tableaux" not in data


def test_enum_all_and_yaml(capsys):
    code, out = _run(capsys, ["enum", "-s", "2,1", "-t", "1|2", "--all", "--yaml"])
    assert code == EXIT_OK
    data = yaml.safe_load(out)
    assert data["counts"]["tableaux"] == 3
    assert len(data["tableaux"]) == 3
    assert data["shape"] == [2, 1]


def test_enum_without_semistandard_tableaux(capsys):
    code, out = _run(capsys, ["enum", "-s", "2,1", "-t", "|3"])
    assert code == EXIT_OK
    assert json.loads(out)["semistandard"] == []


def test_sign_theta(capsys):
    code, out = _run(capsys, ["theta", "-s", "1^6", "-t", "|6", "-r", "0"])
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["entries"] == [["720"]]
    assert data["rep"] == [1, 2, 3, 4, 5, 6]
    code, out = _run(capsys, ["theta", "-s", "1^6", "-t", "|6", "-r", "0", "-f", "5"])
    assert json.loads(out)["entries"] == [["0"]]


def test_theta_all_sstd_lists_every_matrix(capsys):
    code, out = _run(capsys, ["theta", *HOOK_ARGS, "--all-sstd", "--pretty"])
    assert code == EXIT_OK
    data = json.loads(out)
    reps = [hom["rep"] for hom in data]
    assert reps == [[1, 2, 3, 4, 5, 6, 7], [1, 2, 3, 4, 7, 5, 6]]
    assert all(hom["rows"] == 6 and hom["cols"] == 210 for hom in data)


@pytest.mark.parametrize("field, expected", [("q", 2), ("3", 1), ("5", 2)])
def test_hook_rank(capsys, field, expected):
    argv = ["theta", *HOOK_ARGS, "--all-sstd", "--rank", "-f", field]
    code, out = _run(capsys, argv)
    assert code == EXIT_OK
    assert json.loads(out)["rank"] == expected


def test_theta_direct_matches_table(capsys):
    argv = ["theta", "-s", "2,2,1", "-t", "2|2,1", "-r", "[1,2,3,5,4]"]
    _, table = _run(capsys, argv)
    _, direct = _run(capsys, [*argv, "--direct"])
    assert table == direct


@pytest.mark.parametrize(
    "argv",
    [
        ["theta", "-s", "2", "-t", "|2", "-r", "0"],
        ["theta", "-s", "2,1", "-t", "|2", "-r", "0"],
        ["theta", "-s", "2,1", "-t", "2|1", "-r", "7"],
        ["theta", "-s", "2,1", "-t", "2|1", "-r", "0", "--t0", "1,2,3"],
        ["enum", "-s", "1,2", "-t", "3|"],
        ["enum", "-s", "13", "-t", "13|"],
        ["hom-dim", "-s", "2", "-t", "2|", "-f", "4"],
        ["hom-dim", "-s", "2", "-t", "2|", "--bound", "0"],
        ["hom-dim", "-s", "2,1", "-t", "1,1,1|", "--bound", "5"],
        ["counts", "-n", "13"],
        ["verify", "--check", "nope"],
        ["verify", "--max-n", "-1"],
    ],
)
def test_invalid_input_exits_with_usage_code(capsys, argv):
    code, out = _run(capsys, argv)
    assert code == EXIT_USAGE
    assert out == ""


def test_argparse_errors_exit():
    with pytest.raises(SystemExit):
        main(["theta", "-s", "2,1", "-t", "2|1"])
    with pytest.raises(SystemExit):
        main(["enum", "-s", "2", "-t", "2|", "--json", "--yaml"])


def test_hom_dim(capsys):
    code, out = _run(capsys, ["hom-dim", "-s", "2", "-t", "|2", "-f", "2"])
    assert code == EXIT_OK
    assert json.loads(out) == {
        "dim": 1,
        "field": "F_2",
        "shape": [2],
        "type": {"alpha": [], "beta": [2]},
    }


def test_counts_to_stdout(capsys):
    code, out = _run(capsys, ["counts", "-n", "2"])
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "shape,alpha,beta,standard,gamma,semistandard"
    assert len(lines) == 11
    assert "2,,2,1,1,0" in lines


def test_counts_to_file(capsys, tmp_path):
    path = tmp_path / "counts.csv"
    code, out = _run(capsys, ["counts", "-n", "3", "--csv", str(path)])
    assert code == EXIT_OK
    assert json.loads(out)["rows"] == 36
    assert path.read_text(encoding="utf-8").count("\n") == 37


def test_counts_missing_folder(capsys, tmp_path):
    code, _ = _run(capsys, ["counts", "-n", "2", "--csv", str(tmp_path / "a" / "b")])
    assert code == EXIT_USAGE


def test_verify_selected_check(capsys, tmp_path):
    path = tmp_path / "report.csv"
    argv = [
        "verify",
        "--check",
        "theta_one_by_one",
        "--max-n",
        "3",
        "-j",
        "1",
        "--timings",
        "--csv",
        str(path),
    ]
    code, out = _run(capsys, argv)
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["passed"] is True
    assert data["summary"] == {"failed": 0, "total": 6}
    assert all("elapsed" in check for check in data["checks"])
    assert path.is_file()


def test_verify_config_file(capsys, tmp_path):
    config = tmp_path / "bounds.yaml"
    config.write_text("max_n: 2\nworkers: 1\n", encoding="utf-8")
    argv = ["verify", "--check", "theta_one_by_one", "-c", str(config)]
    code, out = _run(capsys, argv)
    assert code == EXIT_OK
    assert json.loads(out)["summary"]["total"] == 4


def test_failed_check_exits_with_one(capsys, monkeypatch):
    monkeypatch.setitem(
        worked.WORKED_CHECKS,
        "theta_one_by_one",
        lambda bounds: [worked.record("forced", "x", 1, 2, 0.0)],
    )
    code, out = _run(capsys, ["verify", "--check", "theta_one_by_one", "-j", "1"])
    assert code == EXIT_CHECK_FAILED
    assert json.loads(out)["passed"] is False
