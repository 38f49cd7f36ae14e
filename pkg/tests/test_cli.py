import json
import math

import numpy as np
import pytest

from specdet.cli import main


def test_spectrum_harmonic(tmp_path, capsys):
    out = tmp_path / "spec.csv"
    rc = main(["spectrum", "--potential", "q^2", "--parity", "even",
               "--count", "5", "--out", str(out)])
    assert rc == 0
    lines = [ln for ln in out.read_text().splitlines() if not ln.startswith("#")]
    assert lines[0] == "k,parity,E_k,err"
    es = [float(ln.split(",")[2]) for ln in lines[1:]]
    assert np.allclose(es, [1, 5, 9, 13, 17], atol=1e-8)


def test_spectrum_both_counts(tmp_path):
    out = tmp_path / "s.json"
    rc = main(["spectrum", "--potential", "q^4", "--parity", "both",
               "--count", "3", "--format", "json", "--out", str(out)])
    assert rc == 0
    data = json.loads(out.read_text())
    assert len(data["rows"]) == 6
    assert data["meta"]["tool"] == "specdet"
    ks = [r["k"] for r in data["rows"]]
    assert ks == sorted(ks)


def test_spectrum_q2_first_five(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["spectrum", "--potential", "q^2", "--count", "5",
                 "--parity", "both", "--out", str(out)]) == 0
    rows = [ln for ln in out.read_text().splitlines() if not ln.startswith("#")][1:]
    es = sorted(float(r.split(",")[2]) for r in rows)
    assert np.allclose(es[:5], [1, 3, 5, 7, 9], atol=1e-8)


def test_invalid_potential_exit_code():
    assert main(["spectrum", "--potential", "7", "--count", "3"]) == 2
    assert main(["spectrum", "--potential", "q^2 + 1", "--count", "3"]) == 2


def test_unknown_suite_exit_code():
    assert main(["verify", "not-a-suite"]) == 2


def test_bad_grid_exit_code():
    assert main(["qi", "--grid", "oops"]) == 2
    assert main(["qi", "--grid", "6:-12:0.1"]) == 2
    assert main(["qi", "--grid", "-20:6:1"]) == 2


def test_qi_figure_data(tmp_path):
    out = tmp_path / "qi.csv"
    rc = main(["qi", "--grid", "-3:3:1.5", "--out", str(out), "--threads", "2"])
    assert rc == 0
    lines = out.read_text().splitlines()
    header = [ln for ln in lines if ln.startswith("# ")]
    assert any("version" in h for h in header)
    body = [ln for ln in lines if not ln.startswith("#")]
    assert body[0].split(",")[:3] == ["v", "qi_plus", "qi_minus"]
    row0 = dict(zip(body[0].split(","), body[-1].split(",")))
    assert abs(float(row0["v"]) - 3.0) < 1e-12


def test_qi_v0_matches_reference(tmp_path):
    out = tmp_path / "qi.json"
    assert main(["qi", "--grid", "0:0:1", "--format", "json",
                 "--out", str(out)]) == 0
    row = json.loads(out.read_text())["rows"][0]
    assert abs(row["qi_plus"] - 1.1572330) < 5e-8
    assert abs(row["qi_minus"] - 1.7282604) < 5e-8


def test_det_grid(tmp_path):
    out = tmp_path / "det.csv"
    rc = main(["det", "--potential", "q^4", "--grid", "0:2:1",
               "--out", str(out)])
    assert rc == 0
    body = [ln for ln in out.read_text().splitlines() if not ln.startswith("#")]
    assert len(body) == 4
    first = body[1].split(",")
    assert abs(float(first[1]) - 1.1572330) < 5e-8


def test_zeta_command(tmp_path):
    out = tmp_path / "z.json"
    rc = main(["zeta", "--potential", "q^2", "--parity", "both", "--s", "2.0",
               "--count", "40", "--format", "json", "--out", str(out)])
    assert rc == 0
    rows = json.loads(out.read_text())["rows"]
    tot = sum(r["value"] for r in rows)
    assert abs(tot - math.pi ** 2 / 8) < 1e-8


def test_binomial_command(tmp_path):
    out = tmp_path / "b.csv"
    rc = main(["binomial", "--N", "4", "--v", "1.0", "--out", str(out)])
    assert rc == 0
    body = [ln for ln in out.read_text().splitlines() if not ln.startswith("#")]
    cells = body[1].split(",")
    assert abs(float(cells[0]) - 1.0) < 1e-14
    assert main(["binomial", "--N", "5"]) == 2


def test_verify_single_suite(tmp_path, capsys):
    out = tmp_path / "rep.json"
    junit = tmp_path / "rep.xml"
    rc = main(["verify", "square-well", "--format", "json",
               "--out", str(out), "--junit", str(junit)])
    assert rc == 0
    data = json.loads(out.read_text())
    assert data["meta"]["passed"] is True
    assert all(r["passed"] for r in data["rows"])
    xml = junit.read_text()
    assert "testsuite" in xml and 'failures="0"' in xml


def test_deterministic_output(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        main(["det", "--potential", "q^4 - 2*q^2", "--grid", "0:1:0.5",
              "--out", str(path)])
    assert a.read_text() == b.read_text()
