"""Tests for the command line surface and report rendering."""

import json
from io import StringIO

import pandas as pd
import pytest

from ybhomology import settings
from ybhomology.cli import load_module, main
from ybhomology.errors import ModuleError
from ybhomology.reports import render, report_frame
from ybhomology.schemas import FiniteModuleFile, RunConfig
from ybhomology.suites import run_decompose, run_homology
from ybhomology.tensor import Subspace, use_rank_mode


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_passes(capsys):
    code, out, _ = run(capsys, "check", "--m", "2", "--n-max", "3")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] and report["first_failure"] is None
    assert report["checks"]["ybe"]


def test_check_degree_zero_is_ybe_only(capsys):
    code, out, _ = run(capsys, "check", "--m", "2", "--n-max", "0")
    assert code == 0
    assert set(json.loads(out)["checks"]) == {"ybe", "invertible"}


def test_kernel_m1(capsys):
    code, out, _ = run(capsys, "kernel", "--m", "1", "--n-max", "4")
    assert code == 0
    assert [r["M"] for r in json.loads(out)["records"]] == [1, 0, 1, 0, 1]


def test_kernel_csv(capsys):
    code, out, _ = run(capsys, "kernel", "--m", "2", "--n-max", "4", "--output", "csv")
    assert code == 0
    df = pd.read_csv(StringIO(out))
    assert df["M"].tolist() == [1, 0, 3, 2, 9]
    assert df["tilde_dim"].tolist() == [0, 0, 3, 2, 0]


def test_decompose_pretty(capsys):
    code, out, _ = run(capsys, "decompose", "--m", "2", "--n", "3", "--output", "pretty")
    assert code == 0
    assert out.startswith("decompose m=2 n=3: dims sum to 8 (passed)")
    assert "1 + y^2 + y^4" in out


def test_homology_commuting_module(capsys):
    code, out, _ = run(capsys, "homology", "--module", "commuting_l3_m3", "--n-max", "2")
    assert code == 0
    report = json.loads(out)
    assert [r["dim_H"] for r in report["records"]] == [1, 3, 9]
    assert [r["betti_formula"] for r in report["records"]] == [1, 3, 9]
    assert report["r"] == [2, 4, 2] and report["r_stacked"] == [2, 4, 2]


def test_homology_zero_module(capsys):
    code, out, _ = run(capsys, "homology", "--module", "zero_l1_m2.json", "--n-max", "4")
    assert code == 0
    assert [r["dim_H"] for r in json.loads(out)["records"]] == [1, 2, 4, 8, 16]


def test_homology_free(capsys):
    code, out, _ = run(capsys, "homology", "--free", "--m", "2", "--truncation", "4")
    assert code == 0
    records = json.loads(out)["records"]
    assert {r["n"]: r["dim_H"] for r in records if r["total_degree"] == r["n"]} == {0: 1, 1: 0, 2: 3, 3: 2, 4: 9}


def test_koszul_commuting_module(capsys):
    code, out, _ = run(capsys, "koszul", "--module", "commuting_l3_m3")
    assert code == 0
    assert json.loads(out)["squares"]["square_3"]


def test_wall_failure_names_pair(capsys):
    code, _, err = run(capsys, "homology", "--module", "noncommuting_l2_m2")
    assert code == 1
    assert "A_1 and A_2" in err


def test_malformed_module_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({"kind": "finite", "l": 2, "m": 2, "A": [[[1, 0], [0, 1]]]}))
    code, _, err = run(capsys, "homology", "--module", str(path))
    assert code == 2
    assert "broken.json" in err


def test_unparsable_entry(tmp_path, capsys):
    path = tmp_path / "poly.json"
    path.write_text(json.dumps({"kind": "finite", "l": 1, "m": 2, "A": [[["1 +"]], [[0]]]}))
    code, _, _ = run(capsys, "homology", "--module", str(path))
    assert code == 2


def test_module_source_required(capsys):
    code, _, err = run(capsys, "homology", "--m", "2")
    assert code == 2
    assert "--module or --free" in err


def test_bad_alphabet(capsys):
    code, _, _ = run(capsys, "check", "--m", "0")
    assert code == 2


def test_unknown_rank_mode_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["check", "--rank-mode", "fast"])
    assert info.value.code == 2


def test_save_report(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(settings, "REPORTS_PATH", tmp_path)
    code, _, _ = run(capsys, "check", "--m", "1", "--n-max", "2", "--save", "--output", "csv")
    assert code == 0
    assert (tmp_path / "check_m1.csv").exists()


def test_load_module_location(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{\"kind\": \"finite\",")
    with pytest.raises(ModuleError) as info:
        load_module(path)
    assert info.value.location.startswith("bad.json:1:")


def test_load_module_parses_finite():
    module = load_module("commuting_l3_m3")
    assert isinstance(module, FiniteModuleFile)
    assert module.l == 3


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(command="check", n_max=-1)
    with pytest.raises(ValueError):
        RunConfig(command="koszul")
    assert RunConfig(command="koszul", free=True).truncation == 6


def test_render_formats_agree():
    report = run_decompose(2, 2)
    assert json.loads(render(report, "json"))["dims_sum"] == 4
    assert report_frame(report)["dim"].tolist() == [3, 0, 1]
    with pytest.raises(ValueError):
        render(report, "xml")


def test_koszul_free_module_file(capsys):
    code, out, _ = run(capsys, "koszul", "--module", "free_m2.json")
    assert code == 0
    report = json.loads(out)
    assert report["kind"] == "free"
    assert report["delta_exact"] and all(report["delta_exact"].values())


def test_decompose_report_carries_bases():
    report = run_decompose(2, 3)
    assert report.passed
    assert report.checks["eigenvalues"]
    spaces = [Subspace.from_payload(p.basis) for p in report.parts]
    assert [s.dim for s in spaces] == [2, 6, 0, 0]
    assert "basis" not in report_frame(report).columns


def test_homology_suite_with_both_rank_modes(zero_module):
    with use_rank_mode("both"):
        report = run_homology(zero_module, 3)
    assert report.passed
    assert [r.dim_H for r in report.records] == [1, 2, 4, 8]
