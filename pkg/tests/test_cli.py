from __future__ import annotations

import io
import json
import subprocess
import sys

import jsonschema
import pytest

from lconn.cli import Config, UsageError, run
from lconn.verify import theorems
from lconn.verify.report import report_schema
from lconn.graph import path_graph


def call(*argv, stdin: str = ""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


class TestGolden:
    def test_spectrum_k2(self):
        code, out, _ = call("spectrum", "A_")
        assert code == 0
        assert out == (
            "rho 1\n"
            "eigenvalues 1 -1\n"
            "laplacian 0 2\n"
            "perron 0.7071067812 0.7071067812\n"
            "lambda_abs 1\n"
        )

    def test_charpoly(self):
        code, out, _ = call("charpoly", "--k", "1", "--parts", "1,1")
        assert code == 0
        assert out == "coefficients 1 0 -2 -1\nroot 1.618033989\n"

    def test_charpoly_json(self):
        code, out, _ = call("charpoly", "--k", "1", "--parts", "1,1", "--format", "json")
        data = json.loads(out)
        assert data["coefficients"] == [1, 0, -2, -1]
        assert data["root"] == 1.618033989

    def test_invariants_text(self):
        code, out, _ = call("invariants", "Cl", "--l", "2,3")  # C4
        assert code == 0
        assert out == (
            "graph6 Cl\nrho 2\ndelta 2\n"
            "kappa_l[2] 2\nkappa_l[3] 2\n"
            "kappa_edge_l[2] 2\nkappa_edge_l[3] 3\n"
            "toughness 1/1\ntau 1\nalpha 2\n"
        )

    def test_invariants_csv_columns(self):
        code, out, _ = call("invariants", "Cl", "--l", "2", "--format", "csv")
        header, row = out.strip().splitlines()
        assert header == "graph6,l,rho,kappa_l,kappa_edge_l,toughness_num,toughness_den,tau,alpha,delta"
        assert row == "Cl,2,2,2,2,1,1,1,2,2"

    def test_invariants_stdin(self):
        code, out, _ = call("invariants", "-", "--l", "2", "--format", "json", stdin="A_\nBw\n")
        data = json.loads(out)
        assert [d["graph6"] for d in data] == ["A_", "Bw"]
        assert data[1]["kappa_l"] == {"2": 2}  # K3: the small-graph convention gives n - l + 1

    def test_family_vertex(self):
        code, out, _ = call("family", "vertex", "--n", "8", "--kappa", "1", "--delta", "2", "--l", "3")
        assert code == 0 and out == "G~aKCC\n"

    def test_family_json_echo(self):
        code, out, _ = call("family", "edge", "--n", "6", "--a", "2", "--b", "2", "--format", "json")
        data = json.loads(out)
        assert data["graph"] == "E}vW" and data["params"] == {"n": 6, "a": 2, "b": 2}

    def test_family_digraph(self):
        code, out, _ = call("family", "digraph-extremal", "--n", "5", "--kappa", "1", "--l", "3")
        assert code == 0 and out == "&D^^[W?\n"

    def test_check_text(self):
        code, out, _ = call("check", "L4.4", "--instance", '{"a": 3, "b": 2}')
        assert code == 0
        assert out == "lemma L4.4\nholds true\nleft 4\nright 6\n"

    def test_check_instance_stdin(self):
        code, out, _ = call("check", "L4.1", "--instance", "-", "--format", "json", stdin='{"graph": "Cl"}')
        assert code == 0 and json.loads(out)["holds"] is True


class TestVerify:
    def test_edge_theorem_confirmed(self, tmp_path):
        report = tmp_path / "r.json"
        rows = tmp_path / "r.csv"
        code, out, _ = call("verify", "T1.3", "--n", "6", "--kappa-edge", "2", "--l", "2",
                            "--out", str(report), "--csv", str(rows))
        assert code == 0
        assert "verdict confirmed" in out
        data = json.loads(report.read_text())
        jsonschema.validate(data, report_schema())
        assert data["verdict"] == "confirmed" and data["class_size"] == 41
        lines = rows.read_text().splitlines()
        assert lines[0] == "graph6,rho,kappa_edge_l,delta" and len(lines) == 42

    def test_json_stdout_validates(self):
        code, out, _ = call("verify", "T1.2", "--n", "4", "--kappa", "1", "--l", "2", "--format", "json")
        assert code == 0
        jsonschema.validate(json.loads(out), report_schema())

    def test_infeasible_exit_2(self):
        code, out, _ = call("verify", "T1.3", "--n", "5", "--kappa-edge", "2", "--l", "2")
        assert code == 2 and "verdict infeasible" in out

    def test_counterexample_exit_1(self, monkeypatch):
        monkeypatch.setattr(theorems, "_family", lambda tid, p: path_graph(6))
        code, out, _ = call("verify", "T1.3", "--n", "6", "--kappa-edge", "1", "--l", "2")
        assert code == 1 and "verdict counterexample" in out

    def test_missing_parameter(self):
        code, _, err = call("verify", "T1.1", "--n", "8", "--l", "3")
        assert code == 2 and "--delta" in err and "usage" in err

    def test_env_workers(self, monkeypatch):
        monkeypatch.setenv("LCONN_WORKERS", "nope")
        code, _, err = call("verify", "T1.3", "--n", "6", "--kappa-edge", "2", "--l", "2")
        assert code == 2 and "LCONN_WORKERS" in err


class TestErrors:
    @pytest.mark.parametrize("argv", [
        [],
        ["bogus"],
        ["verify", "T7.7"],
        ["charpoly", "--k", "1"],
        ["charpoly", "--k", "1", "--parts", "a,b"],
        ["check", "L4.4"],
    ])
    def test_usage_errors(self, argv):
        code, out, err = call(*argv)
        assert code == 2 and out == "" and "usage" in err

    def test_bad_graph6(self):
        code, out, err = call("spectrum", "B~~")
        assert code == 2 and out == "" and "lconn spectrum" in err

    def test_infeasible_family(self):
        code, _, err = call("family", "edge", "--n", "4", "--a", "3", "--b", "2")
        assert code == 2 and "n >= a + 2" in err

    def test_hypothesis_violation_exit_2(self):
        code, _, err = call("check", "L4.4", "--instance", '{"a": 1, "b": 2}')
        assert code == 2 and "a >= b" in err

    def test_bad_json(self):
        code, _, err = call("check", "L4.4", "--instance", "{oops")
        assert code == 2 and "JSON" in err

    def test_config_validation(self):
        with pytest.raises(UsageError):
            Config(tolerance=0)
        with pytest.raises(UsageError):
            Config(graph_cap=11)
        with pytest.raises(UsageError):
            Config(fmt="xml")

    def test_nonpositive_tolerance(self):
        code, _, err = call("check", "L4.4", "--instance", '{"a": 3, "b": 2}', "--tolerance", "0")
        assert code == 2 and "tolerance" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lconn", "spectrum", "A_"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("rho 1\n")
    proc = subprocess.run([sys.executable, "-m", "lconn", "nope"], capture_output=True, text=True)
    assert proc.returncode == 2 and "usage" in proc.stderr
