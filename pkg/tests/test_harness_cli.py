import json

import pytest

from ringlab import harness
from ringlab.cli import main
from ringlab.errors import ConfigError
from ringlab.rings import ResidueRing


def small_catalog():
    return [harness.CatalogEntry(ResidueRing(n)) for n in (6, 8, 12)]


def test_empty_catalog():
    assert harness.run_suite("T1i", []) == []
    assert harness.run_suite("T1ii", []) == []


def test_unknown_suite():
    with pytest.raises(ConfigError):
        harness.run_suite("T99", [])


def test_unknown_bounds():
    with pytest.raises(ConfigError):
        harness.run_suite("T12", [], bounds={"bogus": 1})


def test_ring_suites_on_small_catalog():
    for suite in ("T1i", "T1ii", "T8", "T9", "T10"):
        verdicts = harness.run_suite(suite, small_catalog())
        assert len(verdicts) == 3
        assert all(v.status != harness.COUNTEREXAMPLE for v in verdicts)


def test_t2_uses_residue_entries_once():
    catalog = small_catalog() + small_catalog()
    verdicts = harness.run_suite("T2", catalog)
    assert [v.subject for v in verdicts] == ["Z/6", "Z/8", "Z/12"]
    assert all(v.status == harness.VERIFIED for v in verdicts)


def test_grid_suites_ignore_catalog():
    bounds = {"t4_bound": 5, "t12_bound": 5, "t5_triples": 20}
    for suite in ("T4", "T5", "T12"):
        (verdict,) = harness.run_suite(suite, [], bounds=bounds)
        assert verdict.status == harness.VERIFIED


def test_report_determinism():
    bounds = {"t4_bound": 4, "t12_bound": 4, "t5_triples": 10}
    kw = dict(catalog=small_catalog(), bounds=bounds,
              suites=("T1i", "T2", "T4"))
    first = json.dumps(harness.run_all(**kw), sort_keys=True)
    second = json.dumps(harness.run_all(**kw), sort_keys=True)
    assert first == second


def test_load_catalog(tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps(["Z/6", "M2(Z/2)"]))
    entries = harness.load_catalog(str(path))
    assert [e.spec.spec_text for e in entries] == ["Z/6", "M2(Z/2)"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(["Z"]))
    with pytest.raises(ConfigError):
        harness.load_catalog(str(bad))


def test_cli_check(capsys):
    assert main(["check", "Z/6", "--property", "clean"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] is True
    assert main(["check", "Z/6", "--property", "dprop"]) == 0
    assert main(["check", "Zoo", "--property", "clean"]) == 2


def test_cli_witness(capsys):
    assert main(["witness", "asr1", "4", "2", "3", "--ring", "Z"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["shifts"] == ["1"]
    assert main(["witness", "asr1", "0", "2", "3", "--ring", "Z"]) == 2


def test_cli_snf(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(
        {"ring": "Z", "rows": [["1", "0", "0"], ["0", "1", "0"],
                               ["0", "0", "1"]]}))
    assert main(["snf", "--input", str(path), "--certify"]) == 0
    doc = json.loads(capsys.readouterr().out)
    ident = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    assert doc["D"] == doc["P"] == doc["Q"] == ident
    assert doc["certified"] is True
    assert main(["snf", "--input", str(tmp_path / "missing.json")]) == 2


def test_cli_adequate_and_neat(capsys):
    assert main(["adequate", "12", "10", "--ring", "Z"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert (doc["r"], doc["s"]) == ("3", "4")
    assert main(["neat", "6", "--ring", "Z"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] is True


def test_cli_verify(tmp_path, capsys):
    catalog = tmp_path / "catalog.json"
    catalog.write_text(json.dumps(["Z/6", "Z/10"]))
    report = tmp_path / "report.json"
    assert main(["verify", "--suite", "T2", "--catalog", str(catalog),
                 "--report", str(report)]) == 0
    doc = json.loads(report.read_text())
    assert doc["report"]["counterexamples"] == 0
    statuses = [v["status"] for v in doc["report"]["suites"]["T2"]]
    assert statuses == ["Verified", "Verified"]
