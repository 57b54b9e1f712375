import io
import json

import pytest

from trispectra.cli import main


def run_cli(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_triangulate_k2():
    code, text = run_cli(["triangulate", "--graph", "k2", "--q", "1"])
    assert code == 0
    assert "3 3" in text
    assert "3 1 1" in text  # node 3 from edge 1, copy 1


def test_triangulate_k3_header():
    code, text = run_cli(["triangulate", "--graph", "k3", "--q", "1"])
    assert code == 0
    assert "6 nodes, 9 edges" in text


def test_triangulate_parse_error(tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("3 2\n1 2\nbroken\n")
    code, _ = run_cli(["triangulate", "--input", str(bad), "--q", "1"])
    assert code == 2


def test_triangulate_missing_file():
    code, _ = run_cli(["triangulate", "--input", "/nonexistent.edges", "--q", "1"])
    assert code == 2


def test_triangulate_disconnected(tmp_path):
    bad = tmp_path / "disc.edges"
    bad.write_text("4 2\n1 2\n3 4\n")
    code, _ = run_cli(["metrics", "--input", str(bad)])
    assert code == 2


def test_metrics_k3_table():
    code, text = run_cli(["metrics", "--graph", "k3"])
    assert code == 0
    assert "kemeny 1.33333333333" in text
    assert "kirchhoff 2" in text


def test_metrics_k2():
    code, text = run_cli(["metrics", "--graph", "k2"])
    assert code == 0
    assert "kemeny 0.5" in text


def test_metrics_path3_foster():
    code, text = run_cli(["metrics", "--graph", "path:3"])
    assert code == 0
    assert "foster check: sum over edges r = 2" in text


def test_metrics_json_roundtrip():
    code, text = run_cli(["metrics", "--graph", "cycle:5", "--format", "json"])
    assert code == 0
    payload = json.loads(text)
    spec = payload["routes"]["spectral"]
    oracle = payload["routes"]["oracle"]
    dev = max(
        abs(a - b)
        for ra, rb in zip(spec["hitting"], oracle["hitting"])
        for a, b in zip(ra, rb)
    )
    assert dev <= payload["max_route_deviation"] + 1e-15


def test_spectrum_json():
    code, text = run_cli(["spectrum", "--graph", "k3"])
    payload = json.loads(text)
    assert code == 0
    assert payload["eigenvalues"] == pytest.approx([1.0, -0.5, -0.5])
    code, text = run_cli(["spectrum", "--graph", "k3", "--q", "1"])
    payload = json.loads(text)
    assert sorted(payload["branch"]) == sorted(
        ["plus", "plus", "plus", "minus", "minus", "minus"]
    )


def test_transfer_table():
    code, text = run_cli(["transfer", "--graph", "k3", "--q", "1"])
    assert code == 0
    assert "max |deviation|" in text
    assert "kemeny" in text


def test_verify_passes():
    code, text = run_cli(
        ["verify", "--seed", "7", "--trials", "6", "--nmax", "7", "--qmax", "3"]
    )
    assert code == 0
    assert text.count("[pass]") == 4


def test_verify_single_graph():
    code, text = run_cli(["verify", "--graph", "k2", "--q", "2"])
    assert code == 0
    assert "[pass]" in text


def test_verify_deterministic():
    args = ["verify", "--seed", "11", "--trials", "5", "--nmax", "7"]
    assert run_cli(args) == run_cli(args)


def test_pseudofractal_rows():
    code, text = run_cli(["pseudofractal", "--q", "1", "--kmax", "0"])
    assert code == 0
    assert "1.33333333333" in text
    code, text = run_cli(["pseudofractal", "--q", "1", "--kmax", "1"])
    assert "10.8333333333" in text


def test_pseudofractal_csv_sizes():
    code, text = run_cli(["pseudofractal", "--q", "2", "--kmax", "3", "--format", "csv"])
    assert code == 0
    lines = [ln for ln in text.strip().splitlines() if ln]
    assert len(lines) == 5  # header + 4 rows
    last = lines[-1].split(",")
    # n_{2,3} = 3*(5^3-1)/2+3 = 189, m_{2,3} = 375
    assert last[1] == "189" and last[2] == "375"


def test_pseudofractal_json_17_digits():
    code, text = run_cli(["pseudofractal", "--q", "1", "--kmax", "1", "--format", "json"])
    rows = json.loads(text)
    assert rows[1]["kemeny"] == pytest.approx(14 / 3, abs=1e-15)
