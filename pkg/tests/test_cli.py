"""Command-line interface smoke tests (direct main() invocation)."""

from __future__ import annotations

import json

from mpmath import mp, mpf

from su3asym.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_rn_json(capsys):
    rc, out, _ = run(capsys, "rn", "--max", "9", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["max"] == 9
    assert payload["values"][:8] == [1, 1, 1, 3, 3, 3, 8, 8]


def test_rn_csv_with_oracle(capsys):
    rc, out, err = run(capsys, "rn", "--max", "5", "--oracle-check")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,r_n"
    assert lines[1:] == ["0,1", "1,1", "2,1", "3,3", "4,3", "5,3"]
    assert "oracle-check: OK" in err


def test_rn_rejects_bad_max(capsys):
    rc, _, err = run(capsys, "rn", "--max", "-1")
    assert rc == 2
    assert "error" in err


def test_omega_point_json(capsys):
    rc, out, _ = run(capsys, "omega", "--re", "2", "--method", "direct")
    assert rc == 0
    payload = json.loads(out)
    assert payload["method"] == "direct"
    value = mpf(payload["value"][0])
    mp.dps = 40
    assert abs(value - mp.pi**6 / 2835) < mpf("1e-35")


def test_omega_pole_is_an_error(capsys):
    rc, _, err = run(capsys, "omega", "--re", "0.5")
    assert rc == 2
    assert "pole" in err


def test_omega_verify_zeros(capsys):
    rc, out, _ = run(capsys, "omega", "--verify-zeros", "1")
    assert rc == 0
    assert "omega(-1)" in out


def test_constants_json(capsys):
    rc, out, _ = run(capsys, "constants", "--order", "1")
    assert rc == 0
    payload = json.loads(out)
    assert set(payload) == {"X", "Y", "A1", "A2", "A3", "A4", "A5", "C0", "C1"}
    assert payload["C0"].startswith("2.44629")
    assert payload["X"].startswith("1.17117")


def test_compare_csv(capsys):
    rc, out, _ = run(capsys, "compare", "--n", "500,1000,2000", "--terms", "1")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("n,L,log_r_exact")
    assert len(lines) == 7  # header + 3 n values x 2 L values


def test_residual_json(capsys):
    rc, out, _ = run(capsys, "residual", "--z", "0.1", "--eta", "1.25")
    assert rc == 0
    payload = json.loads(out)
    assert mpf(payload["residual"]) > 0
    assert mpf(payload["residual_over_abs_z_eta"]) > 0


def test_residual_bad_z(capsys):
    rc, _, err = run(capsys, "residual", "--z", "-0.1", "--eta", "1.25")
    assert rc == 2
    assert "Re(z)" in err


def test_prec_floor_enforced(capsys):
    rc, _, err = run(capsys, "constants", "--prec", "10")
    assert rc == 2
    assert "working precision" in err
