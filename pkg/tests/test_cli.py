import json
import subprocess
import sys

import pytest

from tabtype.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_perm_type_exchange_count(capsys):
    code, out, _ = run(capsys, "perm-type", "--perm", "3,2,1", "--exchange", "--count")
    assert code == 0
    assert json.loads(out) == {"shape": [[1, 1], [1, 2], [2, 1]], "count": 2}


def test_balanced_count(capsys):
    assert run(capsys, "balanced", "--shape", "2,2", "--count")[1].strip() == "2"


def test_verify_oracle_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--max-n", "5")
    assert code == 0
    assert "S_5" in out and all(line.startswith("PASS") for line in out.strip().splitlines())


def test_verify_failure_exits_one(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "schur", "--max-n", "3")
    assert code == 1
    assert out.startswith("FAIL")


def test_unknown_suite(capsys):
    assert run(capsys, "verify", "--suite", "nope")[0] == 2


def test_validation_errors(capsys):
    assert run(capsys, "count", "--perm", "1,1")[0] == 2
    assert run(capsys, "balanced", "--shape", "1,2", "--count")[0] == 2
    assert run(capsys, "count")[0] == 2
    code, _, err = run(capsys, "count", "--in", "{not json")
    assert code == 2 and "malformed" in err
    assert run(capsys, "partial", "--perm", "2,1,4,3")[0] == 2
    assert run(capsys, "partial", "--perm", "3,2,1", "--fixed", "(1,1")[0] == 2


def test_unknown_command_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_enum_round_trips_through_type_of(capsys):
    code, out, _ = run(capsys, "enum", "--shape", "2,2")
    assert code == 0
    data = json.loads(out)
    assert len(data["tableaux"]) == 2 and data["truncated"] is False
    code, out, _ = run(capsys, "type-of", "--in", json.dumps(data["tableaux"][0]))
    assert json.loads(out) == {"boxes": [[1, 1, 0], [1, 2, 0], [2, 1, 0], [2, 2, 0]]}
    code, out2, _ = run(capsys, "type-of", "--in", out.strip() and json.dumps(data))
    assert len(out2.strip().splitlines()) == 2


def test_type_json_round_trips(capsys, tmp_path):
    _, out, _ = run(capsys, "balanced", "--shape", "3,2")
    path = tmp_path / "t.json"
    path.write_text(out)
    assert run(capsys, "count", "--in", str(path))[1].strip() == "5"
    _, again, _ = run(capsys, "exchange", "--in", str(path))
    assert json.loads(again) == {"boxes": [[1, 1, 1], [1, 2, 1], [1, 3, 0], [2, 1, 0], [2, 2, 0]]}
    path.write_text(again)
    assert run(capsys, "count", "--in", str(path))[1].strip() == "5"


def test_enum_limit_truncates(capsys):
    code, out, _ = run(capsys, "enum", "--shape", "3,2", "--limit", "2")
    assert code == 3
    assert json.loads(out)["truncated"] is True


def test_enum_render(capsys):
    code, out, _ = run(capsys, "enum", "--perm", "2,1", "--render")
    assert code == 0 and out.strip() == "1"


def test_s_lambda_output_and_round_trip(capsys):
    code, out, _ = run(capsys, "s-lambda", "--shape", "8,7,7,7,3,3,1")
    data = json.loads(out)
    assert data["k"] == 10
    assert data["sigma"] == [9, 8, 10, 11, 4, 5, 2, 1, 3, 6, 7]
    assert data["verified"] is True
    assert len(data["diagram"]["boxes"]) == 36
    _, again, _ = run(capsys, "s-lambda", "--in", out)
    assert again == out


def test_s_lambda_render(capsys):
    _, out, _ = run(capsys, "s-lambda", "--shape", "2,1", "--render")
    assert out.splitlines() == ["k = 2", "# #", "# .", "sigma = 3,2,1", "verified = true"]


def test_vexillary(capsys):
    data = json.loads(run(capsys, "vexillary", "--perm", "2,1,4,3")[1])
    assert data == {"vexillary": False, "code": [1, 0, 1, 0], "mu": [1, 1], "lambda": [1, 1]}


def test_schur_commands(capsys):
    data = json.loads(run(capsys, "schur", "--shape", "2", "--vars", "2")[1])
    assert data == {"m": 2, "terms": [{"exps": [0, 2], "coef": 1}, {"exps": [1, 1], "coef": 1},
                                      {"exps": [2, 0], "coef": 1}]}
    _, out, _ = run(capsys, "schur", "--perm", "3,2,1", "--exchange", "--vars", "2", "--render")
    assert out.strip() == "x1^2x2 + x1x2^2"


def test_partial(capsys):
    data = json.loads(run(capsys, "partial", "--perm", "3,2,1", "--fixed", "(1,2)")[1])
    assert data["count"] == 1 == data["witness_reduced_words"] == data["hook_formula"]
    assert data["nice"] == [1, 1]


def test_stats(capsys):
    data = json.loads(run(capsys, "stats", "--shape", "2,1")[1])
    assert data == {"types": 3, "mean": "2", "variance": "0"}


def test_balanced_render(capsys):
    _, out, _ = run(capsys, "balanced", "--shape", "3,1", "--render")
    assert out.splitlines() == ["2 1 0", "0 . ."]


def test_trace_goes_to_stderr(capsys):
    code, out, err = run(capsys, "exchange", "--in", '{"boxes": [[1,1,1],[1,2,1],[2,1,0],[2,2,0]]}', "--trace")
    assert code == 0 and err.strip() == "row 1 down"
    assert json.loads(out)["boxes"] == [[1, 1, 0], [1, 2, 0], [2, 1, 0], [2, 2, 0]]


def test_budget_variable_truncates(capsys, monkeypatch):
    monkeypatch.setenv("TABTYPE_BUDGET", "10")
    assert run(capsys, "schur", "--shape", "2,2", "--perm", "3,4,1,2", "--vars", "3")[0] == 3


def test_console_script_is_deterministic():
    cmd = [sys.executable, "-m", "tabtype.cli", "enum", "--perm", "4,3,2,1"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second and len(json.loads(first)["tableaux"]) == 16
