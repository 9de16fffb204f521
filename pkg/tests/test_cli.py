import contextlib
import io
import json

import pytest

from ppchars.cli import main


def run_cli(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def without_elapsed(text):
    return "\n".join(l for l in text.splitlines() if "elapsed_seconds" not in l)


def test_landau_json():
    code, out = run_cli(["landau", "--limit", "300"])
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["status"] == "pass"
    assert [row["p"] for row in report["rows"]] == [2, 5, 17, 37, 101, 197, 257]
    assert report["rows"][0]["degenerate"] is True


def test_partitions_subcommand():
    code, out = run_cli(["partitions", "--pi", "10"])
    assert code == 0 and json.loads(out)["rows"][0]["pi"] == 42
    code, out = run_cli(["partitions", "--k", "5", "1"])
    assert json.loads(out)["rows"][0]["k"] == 5


def test_frobenius_subcommand():
    code, out = run_cli(["frobenius", "--p", "5"])
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["degrees"] == [1, 1, 2, 2]
    assert row["pprime_count"] == 4
    assert row["engine_agrees"] is True


def test_degrees_builtin_and_file(tmp_path):
    code, out = run_cli(["degrees", "--group", "A5", "--p", "5"])
    row = json.loads(out)["rows"][0]
    assert row["degrees"] == [1, 3, 3, 4, 5] and row["pprime_count"] == 4

    gfile = tmp_path / "c4.json"
    gfile.write_text(json.dumps({"permutations": [[1, 2, 3, 0]]}))
    code, out = run_cli(["degrees", "--group", str(gfile)])
    assert code == 0
    assert json.loads(out)["rows"][0]["degrees"] == [1, 1, 1, 1]

    table = tmp_path / "c2.json"
    table.write_text(json.dumps({"mult": [[0, 1], [1, 0]]}))
    code, out = run_cli(["degrees", "--group", str(table)])
    assert json.loads(out)["rows"][0]["degrees"] == [1, 1]


def test_verify_symmetric_subcommand():
    code, out = run_cli(["verify-symmetric", "--max-n", "10", "--primes", "5,7"])
    report = json.loads(out)
    assert code == 0 and report["status"] == "pass"
    assert all(row["p"] in (5, 7) for row in report["rows"])


def test_bounds_modes():
    for flags in (["--table1"], ["--table2"], ["--defining"]):
        code, out = run_cli(["bounds"] + flags)
        assert code == 0, flags
        assert json.loads(out)["status"] == "pass"


def test_bounds_classical_failures_only():
    code, out = run_cli(
        ["bounds", "--classical", "--family", "bc", "--failures-only"]
    )
    report = json.loads(out)
    assert code == 1 and report["status"] == "fail"
    assert [(r["q"], r["p"]) for r in report["rows"]] == [(8, 7)]


def test_torus_subcommand():
    code, out = run_cli(["torus-search", "--qmax", "64", "--nmax", "12"])
    assert code == 0
    labels = {r["label"] for r in json.loads(out)["rows"]}
    assert "S4(4)" in labels
    code, out = run_cli(["torus-search", "--reconcile"])
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_solvable_subcommand():
    code, out = run_cli(["solvable", "--p", "5", "--r", "19"])
    report = json.loads(out)
    assert code == 0
    assert report["rows"][0]["pprime_count"] == 4
    assert report["rows"][0]["ok"] is True


def test_csv_format():
    code, out = run_cli(["landau", "--limit", "300", "--format", "csv"])
    lines = out.strip().splitlines()
    assert lines[0] == "p,m,degenerate"
    assert len(lines) == 8


def test_json_determinism_modulo_elapsed():
    _, first = run_cli(["verify-symmetric", "--max-n", "10"])
    _, second = run_cli(["verify-symmetric", "--max-n", "10"])
    assert without_elapsed(first) == without_elapsed(second)


def test_seed_is_echoed():
    _, out = run_cli(["degrees", "--group", "S4", "--seed", "9"])
    assert json.loads(out)["seed"] == 9


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["landau", "--bogus"])
    assert exc.value.code == 2


def test_value_error_exit_code():
    buf = io.StringIO()
    with contextlib.redirect_stderr(buf):
        code = main(["partitions"])
    assert code == 1 and "need --pi" in buf.getvalue()


def test_verify_all_quick():
    code, out = run_cli(["verify-all", "--quick"])
    report = json.loads(out)
    assert code == 0 and report["status"] == "pass"
    checks = {row["check"] for row in report["rows"]}
    assert {"verify-symmetric", "frobenius p=5", "frobenius p=17",
            "solvable p=5", "table2", "torus-search"} <= checks
