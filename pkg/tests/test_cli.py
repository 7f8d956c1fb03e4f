"""Tests for the command line and its reports"""

import json

import jsonschema
import pytest

from parkext.cli import build_parser, main
from parkext.cli import report as report_module
from parkext.cli import verify as verify_module
from parkext.cli.commands import cmd_grfrob, cmd_tables, load_target
from parkext.cli.report import Report, Verdict, load_schema
from parkext.characters.class_functions import coset_character
from parkext.config import get_value
from parkext.exceptions import InvalidInputError
from parkext.utils.core import hash_dict

V3_TERMS = {
    (0, "4", 1),
    (1, "3,1", 1),
    (2, "4", 1),
    (2, "3,1", 1),
    (2, "2,2", 1),
    (3, "3,1", 1),
    (3, "2,1,1", 1),
}


def _record(path):
    with open(path) as file:
        return json.load(file)


def test_parser_defaults():
    args = build_parser().parse_args(["grfrob", "--n", "3"])
    assert (args.n, args.ell, args.m, args.basis) == (3, 1, 1, "s")
    assert not args.restricted

    args = build_parser().parse_args(["extend", "--coset", "3,2,2", "--N", "8"])
    assert args.coset == "3,2,2"
    assert args.mode == "irreducible"

    assert build_parser().parse_args(["verify"]).suite == "all"


def test_parser_rejects_two_targets():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["extend", "--park", "3", "--lie", "3", "--N", "5"])


def test_grfrob_json(tmp_path, capsys):
    path = tmp_path / "v3.json"
    assert main(["grfrob", "--n", "3", "--json", str(path)]) == 0

    record = _record(path)
    jsonschema.validate(record, load_schema())
    assert record["basis"] == "s"
    assert record["parameters"]["group"] == "S_4"
    assert {(t["degree"], t["partition"], t["coeff"]) for t in record["terms"]} == V3_TERMS
    assert {"name": "dimension", "passed": True, "value": "16"} in record["verdicts"]
    assert record["passed"]

    digest = record.pop("digest")
    assert digest == hash_dict(record)

    text = capsys.readouterr().out
    assert text.startswith("parkext grfrob")
    assert "result: PASS" in text
    assert digest in text


def test_reports_are_deterministic(tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    for folder in (first, second):
        folder.mkdir()
        assert (
            main(
                [
                    "grfrob",
                    "--n",
                    "3",
                    "--basis",
                    "h",
                    "--output",
                    str(folder / "report.txt"),
                    "--json",
                    str(folder / "report.json"),
                ]
            )
            == 0
        )
    assert (first / "report.txt").read_text() == (second / "report.txt").read_text()
    assert (first / "report.json").read_text() == (second / "report.json").read_text()
    assert "elapsed" not in (first / "report.txt").read_text()


def test_timing_is_opt_in(tmp_path):
    path = tmp_path / "report.txt"
    assert main(["tables", "--n", "2", "--output", str(path)]) == 0
    assert "elapsed" not in path.read_text()
    assert main(["grfrob", "--n", "2", "--timing", "--output", str(path)]) == 0
    assert "elapsed:" in path.read_text()


def test_grfrob_restricted_agrees_with_paths():
    report = cmd_grfrob(2, 1, 2, basis="h", restricted=True)
    assert report.passed
    names = {v.name: v for v in report.verdicts}
    assert names["S_n character equals the Dyck-path sum"].passed
    assert names["dimension"].value == "5"
    assert report.graded.basis == "h"


def test_grfrob_from_paths():
    report = cmd_grfrob(3, restricted=True, from_paths=True)
    assert report.parameters["source"] == "paths"
    assert report.tables["hilbert"][1] == [[0, 1], [1, 3], [2, 6], [3, 6]]


@pytest.mark.parametrize(
    "argv",
    [
        ["grfrob", "--n", "2", "--ell", "1", "--m", "2"],
        ["grfrob", "--n", "2", "--from-paths"],
        ["grfrob", "--n", "6"],
        ["extend", "--park", "four", "--N", "5"],
        ["extend", "--coset", "3,a", "--N", "5"],
        ["extend", "--coset", "2,1", "--N", "2"],
        ["config", "set", "max_n"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_extend_expectations():
    assert main(["extend", "--coset", "3,2,2", "--N", "8", "--expect", "infeasible"]) == 0
    assert main(["extend", "--coset", "3,2,2", "--N", "8", "--expect", "feasible"]) == 1


def test_extend_out_of_budget_is_inconclusive(tmp_path):
    path = tmp_path / "extend.json"
    argv = ["extend", "--coset", "3,2,2", "--N", "8", "--node-budget", "1", "--json", str(path)]
    assert main(argv) == 3
    record = _record(path)
    assert record["inconclusive"]
    assert record["passed"]
    assert "result: INCONCLUSIVE" in Report(command="extend", inconclusive=True).render()


def test_extend_park_witness(tmp_path):
    path = tmp_path / "park.json"
    assert main(["extend", "--park", "4", "--N", "5", "--json", str(path)]) == 0
    record = _record(path)
    verdicts = {v["name"]: v for v in record["verdicts"]}
    assert verdicts["extends to S_5"] == {"name": "extends to S_5", "passed": None, "value": "feasible"}
    assert verdicts["witness dimension"]["value"] == "125"
    assert "witness" in record["tables"]


def test_extend_from_file(tmp_path):
    """s21 + s3 is Res s31, but h21 is not a restricted coset sum"""
    path = tmp_path / "target.json"
    path.write_text(json.dumps({"n": 3, "basis": "s", "terms": {"2,1": 1, "3": 1}}))
    common = ["extend", "--file", str(path), "--N", "4"]
    assert main(common + ["--expect", "feasible"]) == 0
    assert main(common + ["--mode", "coset", "--expect", "infeasible"]) == 0

    path.write_text(json.dumps({"n": 3}))
    assert main(common) == 2


def test_load_target():
    assert load_target("coset", "2,1") == coset_character((2, 1))
    assert load_target("lie", "3").n == 4
    assert load_target("park", "3").n == 3
    with pytest.raises(InvalidInputError):
        load_target("park", "x")


def test_tables():
    report = cmd_tables(3)
    assert report.verdicts[0].value == "5"
    headers, rows = report.tables["partitions"]
    assert headers == ["partition", "mult"]
    assert [row[0] for row in rows] == ["(1,1,1)", "(2,1)", "(3)"]
    assert len(report.tables["dyck paths"][1]) == 5
    assert report.exit_code == 0


def test_verify_bijection(tmp_path):
    path = tmp_path / "verify.json"
    assert main(["verify", "bijection", "--json", str(path)]) == 0
    record = _record(path)
    assert record["parameters"]["suite"] == "bijection"
    assert all(v["passed"] is not False for v in record["verdicts"])


def test_report_exit_codes():
    report = Report(command="verify")
    report.add("informational", None, 3)
    assert report.exit_code == 0
    report.add("broken", False)
    assert report.exit_code == 1
    assert "result: FAIL" in report.render()
    report.inconclusive = True
    assert report.exit_code == 3


def test_schema_violations_fail(monkeypatch, capsys):
    monkeypatch.setattr(report_module, "load_schema", lambda: {"type": "object", "required": ["missing"]})
    assert main(["tables", "--n", "2"]) == 1
    assert "schema" in capsys.readouterr().err


def test_config_commands(capsys):
    assert main(["config", "set", "threads", "2"]) == 0
    assert get_value()["threads"] == 2
    capsys.readouterr()

    assert main(["config", "show"]) == 0
    out = capsys.readouterr().out
    assert "Setting" in out
    assert "threads" in out

    with pytest.raises(SystemExit):
        main(["config", "set", "colour", "2"])


def _verify(tmp_path, *argv):
    path = tmp_path / "verify.json"
    code = main(["verify", *argv, "--json", str(path)])
    record = _record(path)
    jsonschema.validate(record, load_schema())
    return code, record


def test_verify_extremes(tmp_path):
    code, record = _verify(tmp_path, "extremes", "--max-n", "3")
    assert code == 0
    names = {v["name"] for v in record["verdicts"]}
    assert "V_3(2) = Sym^2" in names
    assert "V_3(3) differs from Sym^3" in names
    assert "V_3^(2,2)(9) = Lie_3 x sign^2" in names
    assert all(v["passed"] for v in record["verdicts"])


def test_verify_main(tmp_path):
    code, record = _verify(tmp_path, "main", "--max-n", "3")
    assert code == 0
    verdicts = {v["name"]: v for v in record["verdicts"]}
    assert verdicts["dim V_3 = 16"]["passed"]
    assert verdicts["dim V_3^(2,2) = 128"]["value"] == "128"
    assert record["passed"]


@pytest.mark.slow
def test_verify_extension(tmp_path):
    code, record = _verify(tmp_path, "extension")
    assert code == 0
    verdicts = {v["name"]: v for v in record["verdicts"]}
    assert verdicts["S_6: coset modules extending to S_7"]["passed"]
    assert verdicts["Park_4 is a restricted coset sum"]["value"] == "feasible"


def test_verify_extension_out_of_budget_is_inconclusive(tmp_path):
    code, record = _verify(tmp_path, "extension", "--node-budget", "1")
    assert code == 3
    assert record["inconclusive"]
    undecided = [v for v in record["verdicts"] if "inconclusive" in v["value"]]
    assert undecided
    assert all(v["passed"] is None for v in undecided)


def test_verify_failure_exits_one(tmp_path, monkeypatch):
    monkeypatch.setitem(verify_module.SUITES, "bijection", lambda options: [Verdict("broken", False, "x")])
    code, record = _verify(tmp_path, "bijection")
    assert code == 1
    assert not record["passed"]
    assert record["verdicts"] == [{"name": "broken", "passed": False, "value": "x"}]
