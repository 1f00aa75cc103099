import csv
import io
import math
from contextlib import redirect_stdout

import pytest

from hypasym.cli import main

from _reference import CASES, rel_diff


def _run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_eval_basic_output():
    code, out = _run(
        ["eval", "--r", "100", "--alpha", "0.1", "--y", "0.991", "--method", "cor3"]
    )
    assert code == 0
    assert "method  = cor3" in out
    assert "regime  = turning" in out
    assert "F2      = " in out


def test_eval_compare_oracle_reference_error():
    code, out = _run(
        [
            "eval", "--r", "100", "--alpha", "0.1", "--y", "0.991",
            "--method", "cor3", "--compare-oracle",
        ]
    )
    assert code == 0
    line = [l for l in out.splitlines() if l.startswith("rel_error")][0]
    assert float(line.split("=")[1]) == pytest.approx(0.000136225, abs=1e-6)


def test_usage_error_exit_2():
    code, _ = _run(["eval", "--r", "100", "--alpha", "0.1", "--y", "1.5"])
    assert code == 2


def test_argparse_usage_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--r", "100"])
    assert exc.value.code == 2


def test_table_case_matches_reference():
    code, out = _run(["table", "--case", "3", "--output", "csv"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.strip())))
    by_name = {row["quantity"]: row for row in rows}
    got = complex(float(by_name["F2"]["re"]), float(by_name["F2"]["im"]))
    assert rel_diff(got, CASES[3]["f2"]) <= 1e-6
    assert float(by_name["cosine-form"]["rel_error"]) == pytest.approx(
        CASES[3]["cor2_err"], abs=1e-4
    )
    assert float(by_name["airy-form"]["rel_error"]) == pytest.approx(
        CASES[3]["cor3_err"], abs=1e-4
    )


def test_table_case4_has_no_cosine_row():
    code, out = _run(["table", "--case", "4"])
    assert code == 0
    assert "cosine-form" not in out
    assert "airy-form" in out


def test_sweep_header_and_roundtrip():
    code, out = _run(
        [
            "sweep", "--r", "100", "--alpha", "0.1",
            "--y-min", "0.985", "--y-max", "0.995", "--steps", "11",
        ]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "y,regime,zeta,zeta_hat,log10_abs_f2,phase,method"
    rows = list(csv.DictReader(io.StringIO(out.strip())))
    assert len(rows) == 11
    for row in rows:
        # 17-digit fields re-parse losslessly and re-format identically
        y = float(row["y"])
        assert f"{y:.17g}" == row["y"]
        assert row["regime"] in ("monotonic", "turning", "oscillatory")
        assert math.isfinite(float(row["log10_abs_f2"]))


def test_sweep_continuity_across_turning():
    code, out = _run(
        [
            "sweep", "--r", "100", "--alpha", "0.1",
            "--y-min", "0.9895", "--y-max", "0.9905", "--steps", "11",
        ]
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.strip())))
    mags = [float(r["log10_abs_f2"]) for r in rows]
    assert all(math.isfinite(m) for m in mags)
    for a, b in zip(mags, mags[1:]):
        assert abs(a - b) < 1.0  # no 10x jump between adjacent points


def test_sweep_envelope_column():
    code, out = _run(
        [
            "sweep", "--r", "100", "--alpha", "0.1",
            "--y-min", "0.5", "--y-max", "0.6", "--steps", "3",
            "--with-envelope",
        ]
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.strip())))
    for row in rows:
        assert row["regime"] == "monotonic"
        assert float(row["log10_envelope"]) >= float(row["log10_abs_f2"])


def test_deterministic_output():
    argv = [
        "sweep", "--r", "100", "--alpha", "0.1",
        "--y-min", "0.985", "--y-max", "0.995", "--steps", "7",
    ]
    _, a = _run(argv)
    _, b = _run(argv)
    assert a == b


def test_out_file(tmp_path):
    target = tmp_path / "run.txt"
    code, out = _run(
        [
            "eval", "--r", "100", "--alpha", "0.1", "--y", "0.991",
            "--method", "cor3", "--out", str(target),
        ]
    )
    assert code == 0
    assert out == ""
    assert "F2      = " in target.read_text()


def test_digits_env_override(monkeypatch):
    monkeypatch.setenv("HYPASYM_DIGITS", "not-a-number")
    code, _ = _run(
        ["eval", "--r", "100", "--alpha", "0.1", "--y", "0.991", "--method", "cor3"]
    )
    assert code == 2
    monkeypatch.setenv("HYPASYM_DIGITS", "70")
    code, _ = _run(
        ["eval", "--r", "100", "--alpha", "0.1", "--y", "0.991", "--method", "cor3"]
    )
    assert code == 0
