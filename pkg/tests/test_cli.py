"""CLI behaviour: formats, determinism, exit codes, JSON roundtrips."""

import json

import pytest

from hbch.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cosets_text(capsys):
    code, out, err = run(capsys, "cosets", "--n", "91", "--q", "8")
    assert code == 0 and not err
    assert "L[1] = {1, 64}" in out


def test_cosets_single_coset(capsys):
    code, out, _ = run(capsys, "cosets", "--n", "1", "--q", "2")
    assert code == 0
    assert "L[0] = {0}" in out


def test_cosets_json_partition(capsys):
    code, out, _ = run(capsys, "cosets", "--n", "1023", "--q", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert sum(len(c) for c in data["cosets"]) == 1023
    assert data["reps"][:4] == [0, 1, 2, 3]


def test_bound_text_values(capsys):
    code, out, _ = run(capsys, "bound", "--q", "2", "--s", "5", "--n1", "93")
    assert code == 0
    fields = out.splitlines()[1].split()
    assert fields[4] == fields[5] == "10"
    code, out, _ = run(capsys, "bound", "--q", "5", "--s", "2", "--n1", "48")
    assert out.splitlines()[1].split()[4] == "7"


def test_bound_no_case_match(capsys):
    code, out, _ = run(capsys, "bound", "--q", "8", "--s", "2", "--n1", "91",
                       "--format", "json")
    assert code == 0
    row = json.loads(out)
    assert row["cases"] == [] and row["L_closed"] is None and row["L_brute"] == 10


def test_construct_reproduces_parameter_strings(capsys):
    code, out, _ = run(capsys, "construct", "--q", "2", "--s", "5", "--n1", "93",
                       "--lambda", "2", "--cosets", "1,2,3,5,6,7", "--lengthen", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "[[186,126,>=9]]_2"
    assert lines[-3:] == ["[[187,126,>=9]]_2", "[[188,126,>=9]]_2", "[[189,126,>=9]]_2"]


def test_construct_bch_route(capsys):
    code, out, _ = run(capsys, "construct", "--q", "8", "--s", "2", "--n1", "91",
                       "--tau", "9", "--lengthen", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "[[91,55,>=11]]_8"
    assert lines[-1] == "[[92,55,>=11]]_8"
    assert "construction=bch" in lines[1]


def test_construct_invalid_lambda_exits_2(capsys):
    code, out, err = run(capsys, "construct", "--q", "2", "--s", "5", "--n1", "93",
                         "--lambda", "11", "--tau", "1")
    assert code == 2
    assert "error" in err


def test_construct_json_roundtrip(capsys):
    args = ("construct", "--q", "5", "--s", "2", "--n1", "48", "--lambda", "2",
            "--tau", "7", "--lengthen", "1", "--format", "json")
    code, out, _ = run(capsys, *args)
    assert code == 0
    data = json.loads(out)
    assert data["params"]["n"] == 96 and data["params"]["k"] == 68
    assert data["lengthened"][0]["n"] == 97
    # printing the parsed object again gives identical bytes
    assert json.dumps(data) == out.strip()


def test_construct_generator_dump_parses(capsys):
    code, out, _ = run(capsys, "construct", "--q", "8", "--s", "2", "--n1", "91",
                       "--tau", "2", "--dump-generator")
    assert code == 0
    block = out.split("generator:\n", 1)[1]
    header = block.splitlines()[0].split()
    assert header == ["64", "91", "4"]


@pytest.mark.parametrize("argv", [
    ("cosets", "--n", "91", "--q", "8"),
    ("bound", "--q", "8", "--s", "2", "--n1", "91", "--format", "csv"),
    ("construct", "--q", "5", "--s", "2", "--n1", "48", "--lambda", "2",
     "--tau", "6", "--format", "csv"),
    ("scan", "--q", "2", "--s", "3", "--n1-max", "100", "--lambdas", "2",
     "--tau-max", "2", "--budget", "50"),
])
def test_commands_are_deterministic(capsys, argv):
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_scan_json(capsys):
    code, out, _ = run(capsys, "scan", "--q", "2", "--s", "3", "--n1-max", "100",
                       "--lambdas", "1,2", "--tau-max", "3", "--budget", "100",
                       "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows
    assert all(r["k"] >= 0 for r in rows)


def test_scan_zero_budget_empty(capsys):
    code, out, _ = run(capsys, "scan", "--q", "2", "--s", "3", "--n1-max", "100",
                       "--lambdas", "2", "--tau-max", "2", "--budget", "0")
    assert code == 0
    assert out == ""


def test_scan_over_budget_exits_2(capsys):
    code, _, err = run(capsys, "scan", "--q", "2", "--s", "3", "--n1-max", "100",
                       "--lambdas", "1,2", "--tau-max", "3", "--budget", "1")
    assert code == 2 and "budget" in err


def test_examples_all_pass(capsys):
    code, out, _ = run(capsys, "examples")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln]
    assert lines and all(ln.startswith("PASS") for ln in lines)
    expected = {"[[186,126,>=9]]_2", "[[189,126,>=9]]_2", "[[96,68,>=8]]_5",
                "[[97,68,>=8]]_5", "[[96,72,>=7]]_5", "[[99,72,>=7]]_5",
                "[[91,55,>=11]]_8", "[[92,55,>=11]]_8"}
    mentioned = set()
    for ln in lines:
        for token in expected:
            if token in ln:
                mentioned.add(token)
    assert mentioned == expected


def test_examples_json_schema(capsys):
    code, out, _ = run(capsys, "examples", "--json")
    assert code == 0
    claims = json.loads(out)
    assert all(set(c) == {"claim", "expected", "ok", "detail"} for c in claims)
    assert all(c["ok"] for c in claims)


def test_argparse_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bound", "--q", "2"])
    assert exc.value.code == 2
