import json
import subprocess
import sys

import jsonschema
import pytest

from wphodge.cli import main
from wphodge.report import load_schema

FERMAT = ["--weights", "1,1,2,5", "--degree", "10"]
F0 = "x1^10 + x2^10 + x3^5 + x4^2"


@pytest.fixture(scope="module")
def validator():
    schema = load_schema()
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


def exit_code(argv):
    """main() return value, or the argparse exit status for usage errors."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(scope="module")
def analyze_json(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "f0.json"
    assert main(["analyze", *FERMAT, "--poly", F0, "--out", str(path)]) == 0
    return path


def test_analyze_fermat(analyze_json, validator):
    doc = json.loads(analyze_json.read_text())
    validator.validate(doc)
    assert [doc["hodge"][k] for k in ("h20", "h11_prim", "h02")] == [2, 28, 2]
    geo = doc["domain_geometry"]
    assert (geo["dim_domain"], geo["dim_horizontal"]) == (57, 56)
    pd = doc["period_differential"]
    assert pd["rank_m"] == 28 and pd["span_rank"] == 28 and pd["pencil"]["min_rank"] == 26
    ng = doc["non_geodesy"]
    assert ng["verdict"] is True and ng["threshold"] == "14" and ng["maximal"] is True
    assert doc["jacobian_ring"]["groebner_basis"] == ["x1^9", "x2^9", "x3^4", "x4"]
    assert doc["jacobian_ring"]["socle_monomial"] == "x1^8*x2^8*x3^3"


def test_analyze_is_byte_identical(analyze_json, tmp_path):
    again = tmp_path / "again.json"
    assert main(["analyze", *FERMAT, "--poly", F0, "--out", str(again)]) == 0
    assert again.read_bytes() == analyze_json.read_bytes()


def test_fermat_command_and_poly_file(analyze_json, tmp_path, capsys, validator):
    code, out, _ = run(["fermat", *FERMAT], capsys)
    assert code == 0
    doc = json.loads(out)
    validator.validate(doc)
    ref = json.loads(analyze_json.read_text())
    assert doc["hodge"] == ref["hodge"] and doc["non_geodesy"] == ref["non_geodesy"]
    pfile = tmp_path / "f.txt"
    pfile.write_text(F0 + "\n")
    code, out, _ = run(["certify", *FERMAT, "--poly-file", str(pfile), "--mode", "sampled", "--seed", "7"], capsys)
    assert code == 0
    cert = json.loads(out)
    validator.validate(cert)
    assert "jacobian_ring" not in cert
    assert cert["non_geodesy"]["mode"] == "sampled" and cert["non_geodesy"]["verdict"] is True
    assert cert["period_differential"]["pencil"]["seed"] == 7


def test_include_matrices_and_timing(capsys, validator):
    code, out, _ = run(["fermat", *FERMAT, "--include-matrices", "--timing"], capsys)
    assert code == 0
    doc = json.loads(out)
    validator.validate(doc)
    mats = doc["period_differential"]["matrices"]
    assert len(mats["matrix_m"]) == 56 and len(mats["matrix_m"][0]) == 28
    assert len(mats["A"]) == 28
    assert doc["timing"]["total_seconds"] >= 0


def test_markdown_matches_json(analyze_json, capsys):
    code, md, _ = run(["analyze", *FERMAT, "--poly", F0, "--format", "markdown"], capsys)
    assert code == 0
    doc = json.loads(analyze_json.read_text())
    rows = {}
    section = None
    for line in md.splitlines():
        if line.startswith("## ") or line.startswith("### "):
            section = line.split(" ", 1)[1]
        elif line.startswith("| ") and section and not line.startswith("| field"):
            key, value = [c.strip() for c in line.strip("|").split("|")]
            rows[(section, key)] = value
    for name in ("hodge", "domain_geometry", "period_differential", "non_geodesy"):
        for key, value in doc[name].items():
            if isinstance(value, bool):
                assert rows[(name, key)] == ("yes" if value else "no")
            elif isinstance(value, (int, str)):
                assert rows[(name, key)] == str(value)
    for key in ("generic_rank", "min_rank"):
        assert rows[("pencil", key)] == str(doc["period_differential"]["pencil"][key])


def test_not_quasi_smooth_exit_code(capsys, tmp_path):
    out = tmp_path / "never.json"
    code, _, err = run(["analyze", "--weights", "1,1,2,5", "--degree", "4",
                        "--poly", "x1^4 + x2^4 + x3^2", "--out", str(out)], capsys)
    assert code == 2 and "not quasi-smooth" in err
    assert not out.exists()
    assert list(tmp_path.iterdir()) == []


@pytest.mark.parametrize("argv", [
    ["analyze", *FERMAT, "--poly", "x1^10 + y"],
    ["analyze", *FERMAT, "--poly", "x1^9 + x2^10"],
    ["analyze", "--weights", "2,2,4,6", "--degree", "12", "--poly", "x1^6"],
    ["fermat", "--weights", "1,1,2,5", "--degree", "11"],
    ["analyze", *FERMAT, "--poly-file", "/nonexistent/poly.txt"],
    ["analyze", "--weights", "1,1,2", "--degree", "10", "--poly", F0],
    ["search", "--max-weights", "1,1,1,1", "--max-degree", "5", "--workers", "0"],
    ["report", "--in", "/nonexistent.json"],
    ["frobnicate"],
])
def test_invalid_input_exit_code(argv, capsys):
    assert exit_code(argv) == 1


def test_consistency_exit_code(monkeypatch, capsys):
    from wphodge.hodge import period

    def broken(report, geometry):
        raise period.ConsistencyError("forced")

    monkeypatch.setattr("wphodge.report.check_rank_bound", broken)
    code, _, err = run(["fermat", *FERMAT], capsys)
    assert code == 3 and "consistency" in err


def test_search_cli(tmp_path, capsys, validator):
    out = tmp_path / "search.json"
    assert main(["search", "--max-weights", "1,1,2,5", "--max-degree", "10",
                 "--min-degree", "10", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    validator.validate(doc)
    (row,) = [r for r in doc["rows"] if r["weights"] == [1, 1, 2, 5] and r["degree"] == 10]
    assert row["maximal"] and row["hodge"] == [2, 28, 2] and row["rank_m"] == 28
    code, md, _ = run(["report", "--in", str(out), "--format", "markdown"], capsys)
    assert code == 0 and "| (1, 1, 2, 5) | 10 | ok | (2, 28, 2) |" in md
    code, again, _ = run(["report", "--in", str(out)], capsys)
    assert code == 0 and again == out.read_text()


def test_search_quintic_row(capsys, validator):
    code, out, _ = run(["search", "--max-weights", "1,1,1,1", "--max-degree", "5", "--min-degree", "5"], capsys)
    assert code == 0
    doc = json.loads(out)
    validator.validate(doc)
    (row,) = doc["rows"]
    assert row["hodge"] == [4, 44, 4] and (row["dim_domain"], row["dim_horizontal"]) == (182, 176)


def test_search_empty_range(capsys, validator):
    code, out, _ = run(["search", "--max-weights", "1,1,1,1", "--max-degree", "3", "--min-degree", "5"], capsys)
    assert code == 0
    doc = json.loads(out)
    validator.validate(doc)
    assert doc["rows"] == []


def test_report_rerenders_certificate(analyze_json, capsys):
    code, out, _ = run(["report", "--in", str(analyze_json)], capsys)
    assert code == 0 and out == analyze_json.read_text()


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wphodge.cli", "fermat", "--weights", "1,1,1,1",
                           "--degree", "3", "--format", "markdown"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "# Certificate (fermat)" in proc.stdout
