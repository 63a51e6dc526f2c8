"""Golden CLI outputs, formats, and exit codes."""

import io
import json

import pytest

from negmom.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def data_lines(out):
    """Text-format rows, dropping the timing footer."""
    return [line for line in out.splitlines() if not line.startswith("#")]


def test_moment_table_golden(capsys):
    code, out, _ = run_cli(
        ["moment", "--n", "0..6", "--k", "3", "--b", "zero", "--lambda", "one"],
        capsys)
    assert code == 0
    assert data_lines(out) == ["0 1", "1 0", "2 1", "3 0", "4 2", "5 0", "6 5"]


def test_moment_negative_golden(capsys):
    code, out, _ = run_cli(
        ["moment", "--negative", "--n", "1..3", "--k", "3",
         "--b", "zero", "--lambda", "one"], capsys)
    assert code == 0
    assert data_lines(out) == ["1 0", "2 2", "3 0"]


def test_moment_symbolic_trivial(capsys):
    code, out, _ = run_cli(
        ["moment", "--n", "0", "--k", "0", "--b", "symbolic",
         "--lambda", "symbolic"], capsys)
    assert code == 0
    assert data_lines(out) == ["0 1"]


def test_moment_ill_defined_exits_2(capsys):
    code, out, err = run_cli(
        ["moment", "--negative", "--n", "1", "--k", "2",
         "--b", "zero", "--lambda", "one"], capsys)
    assert code == 2
    assert "P_3(0)" in err


def test_moment_json_schema(capsys):
    code, out, _ = run_cli(
        ["moment", "--n", "0..2", "--k", "1", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"command", "params", "results"}
    assert payload["results"][2]["value"] == "b0^2 + lam1"


def test_sequence_count_golden(capsys):
    code, out, _ = run_cli(
        ["sequence", "alt", "--n", "3", "--k", "2", "--emit", "count"], capsys)
    assert code == 0 and data_lines(out) == ["5"]
    code, out, _ = run_cli(
        ["sequence", "schroeder", "--n", "4", "--k", "1", "--emit", "count"],
        capsys)
    assert code == 0 and data_lines(out) == ["5"]


def test_sequence_pv_list_golden(capsys):
    code, out, _ = run_cli(
        ["sequence", "pv", "--ell", "2", "--n", "3", "--k", "1",
         "--emit", "list"], capsys)
    assert code == 0 and data_lines(out) == ["(1,0,1)"]


def test_sequence_weights(capsys):
    code, out, _ = run_cli(
        ["sequence", "motzkin", "--n", "2", "--k", "1", "--emit", "weights"],
        capsys)
    assert code == 0
    rows = dict(line.split(" ", 1) for line in data_lines(out))
    assert rows["UD"] == "lam1"
    assert rows["HH"] == "b0^2"


def test_verify_pass_lines_and_exit(capsys):
    code, out, _ = run_cli(["verify", "ck", "--n", "1..2", "--k", "1..2"], capsys)
    assert code == 0
    lines = data_lines(out)
    assert len(lines) == 4
    assert all(line.endswith("status=PASS") for line in lines)
    assert lines[0] == "ck params=n=1,k=1 status=PASS"


def test_verify_skips_do_not_fail(capsys):
    code, out, _ = run_cli(
        ["verify", "conj53", "--n", "1..1", "--k", "1..2", "--m", "1..2"],
        capsys)
    assert code == 0
    lines = data_lines(out)
    statuses = [line.rsplit("status=", 1)[1] for line in lines]
    assert "SKIPPED" in statuses and "PASS" in statuses
    assert "FAIL" not in statuses


def test_verify_deterministic(capsys):
    a = run_cli(["verify", "thm15", "--n", "0..1", "--k", "0..1", "--m", "0..1"],
                capsys)
    b = run_cli(["verify", "thm15", "--n", "0..1", "--k", "0..1", "--m", "0..1"],
                capsys)
    assert data_lines(a[1]) == data_lines(b[1])


def test_verify_unknown_identity_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_verify_json(capsys):
    code, out, _ = run_cli(
        ["verify", "ck", "--n", "1..1", "--k", "1..1", "--format", "json"],
        capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["results"][0]["status"] == "PASS"
    assert payload["results"][0]["identity"] == "ck"


def test_verify_csv(capsys):
    code, out, _ = run_cli(
        ["verify", "ck", "--n", "1..1", "--k", "1..1", "--format", "csv"],
        capsys)
    assert code == 0
    assert out.splitlines()[0] == "line"


def test_bad_range_usage_error(capsys):
    code, _, err = run_cli(["moment", "--n", "5..1", "--k", "1"], capsys)
    assert code == 2 and "error" in err
