import csv
import io
import json
import subprocess
import sys

import pytest

from semiflow.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list_models(capsys):
    code, out, _ = run(["list-models"], capsys)
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 6
    assert "slit  disk  finite  Θ=pi  orbit" in lines
    dy = [ln for ln in lines if ln.startswith("dyadic-comb")][0]
    assert "Θ=0" in dy and dy.endswith("geometry-only")


def test_orbit_csv_rows(capsys, tmp_path):
    path = tmp_path / "hp.csv"
    code, _, _ = run(["orbit", "--model", "halfplane", "--z", "0,0", "--t0", "1", "--t1", "1e6",
                      "--count", "200", "--out", str(path)], capsys)
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 201 and float(rows[0]["t"]) == 0.0
    assert list(rows[0])[:8] == ["t", "re", "im", "disk_re", "disk_im", "eucl_to_dw", "hyp_from_start", "horodisk_param"]


def test_orbit_slit_h_equals_t(capsys):
    code, out, _ = run(["orbit", "--model", "slit", "--z", "0,0", "--t1", "1e5", "--count", "40"], capsys)
    assert code == 0
    for row in csv.DictReader(io.StringIO(out)):
        t = float(row["t"])
        assert abs(float(row["h_re"]) - t) <= 1e-10 * (1 + t) and abs(float(row["h_im"])) <= 1e-10 * (1 + t)


def test_orbit_json(capsys):
    code, out, _ = run(["orbit", "--model", "comb", "--t1", "100", "--count", "5", "--format", "json"], capsys)
    assert code == 0 and len(json.loads(out)["samples"]) == 6


@pytest.mark.parametrize("argv", [
    ["orbit", "--model", "slit-mid"],
    ["orbit", "--model", "nope"],
    ["orbit", "--model", "halfplane", "--z", "2,0"],
    ["orbit", "--model", "halfplane", "--t0", "5", "--t1", "1"],
    ["orbit"],
    ["frobnicate"],
    ["harmonic", "--domain", "example52", "--n", "5"],
    ["harmonic", "--domain", "strip", "--target", "left"],
])
def test_usage_errors(argv, capsys):
    code, _, _ = run(argv, capsys)
    assert code == 2


def test_rates_command(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, _, _ = run(["rates", "--model", "sector", "--json", str(path)], capsys)
    doc = json.loads(path.read_text())
    assert code == 0
    assert [r["verdict"] for r in doc["reports"]] == ["within", "within"]
    assert set(doc["reports"][0]) >= {"kind", "slope", "intercept", "r_squared", "window", "bracket", "verdict"}


def test_harmonic_command(capsys):
    code, out, _ = run(["harmonic", "--domain", "halfplane", "--paths", "2000", "--seed", "5"], capsys)
    d = json.loads(out)
    assert code == 0 and list(d) == ["value", "stderr", "method", "paths", "seed"]
    code, out, _ = run(["harmonic", "--domain", "halfplane", "--method", "exact"], capsys)
    assert json.loads(out)["value"] == 0.25


def test_verify_geometry(capsys, tmp_path):
    path = tmp_path / "g.json"
    code, out, _ = run(["verify", "--suite", "geometry", "--json", str(path)], capsys)
    assert code == 0 and "[PASS] 1" in out and "[PASS] 9" in out
    doc = json.loads(path.read_text())
    assert doc["passed"] and all(c["reference"] for cr in doc["criteria"] for c in cr["checks"])


def test_verify_rates_reproducible(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["verify", "--suite", "rates", "--seed", "7", "--json", str(a)], capsys)[0] == 0
    assert run(["verify", "--suite", "rates", "--seed", "7", "--json", str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_harmonic_tiny_sample_fails(capsys):
    code, out, _ = run(["verify", "--suite", "harmonic", "--paths", "100"], capsys)
    assert code == 1 and "[FAIL] 6" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "semiflow", "list-models"], capture_output=True, text=True)
    assert res.returncode == 0 and len(res.stdout.splitlines()) == 6
