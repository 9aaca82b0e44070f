import json

import pytest

from cosetlattice.catalog import HEADER, fixture_path
from cosetlattice.cli import main


def test_analyze(capsys):
    assert main(["analyze", "--degree", "21", "--id", "100", "--cm"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["phi"] == 16 and rec["phi_hat"] == 8 and rec["cohen_macaulay"]


def test_analyze_unknown_entry(capsys):
    assert main(["analyze", "--degree", "99", "--id", "1"]) == 2
    assert "no catalog entry" in capsys.readouterr().err


def test_analyze_limit_flag(capsys):
    assert main(["--max-group-order", "10", "analyze", "--degree", "21", "--id", "100"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "skipped"


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"max_group_order": 10}))
    assert main(["--config", str(cfg), "analyze", "--degree", "5", "--id", "5"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "skipped"
    # flags override the config file
    assert main(["--config", str(cfg), "--max-group-order", "1000", "analyze", "--degree", "5", "--id", "5"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "ok"


def test_scan(tmp_path, capsys):
    out = tmp_path / "log.jsonl"
    assert main(["scan", "--filter", "boolean", "--out", str(out), "--jobs", "2"]) == 0
    s = json.loads(capsys.readouterr().out)
    assert s["non_group_complemented_boolean"] == [[21, 100], [28, 100]]
    assert out.exists()


def test_corrupted_catalog(tmp_path, capsys):
    bad = tmp_path / "bad.cat"
    bad.write_text(fixture_path().read_text().replace("2|1|S2|1,0", "2|1|S2|1,1"))
    assert main(["verify-paper", "--catalog", str(bad), "--no-homology", "--no-stretch"]) == 2
    assert "line" in capsys.readouterr().err


def test_missing_catalog(tmp_path):
    assert main(["scan", "--catalog", str(tmp_path / "nope.cat"), "--out", str(tmp_path / "o")]) == 2


def test_verify_no_homology(tmp_path, capsys):
    report = tmp_path / "r.json"
    code = main(["verify-paper", "--no-homology", "--no-stretch", "--out", str(report)])
    out = capsys.readouterr().out
    assert code == 0
    data = json.loads(report.read_text())
    status = {c["number"]: c["status"] for c in data}
    assert status[4] == status[5] == status[6] == status[9] == status[10] == "skip"
    assert status[1] == status[2] == status[3] == status[7] == status[8] == "pass"
    assert "0 failed, 5 skipped" in out


def test_verify_mismatch_exit(tmp_path, capsys):
    # the (21, 100) entry replaced by the regular C21: criterion 1 must fail
    text = [l for l in fixture_path().read_text().splitlines() if not l.startswith("21|100|")]
    text.append("21|100|C21|" + ",".join(str((i + 1) % 21) for i in range(21)))
    p = tmp_path / "swap.cat"
    p.write_text("\n".join(text) + "\n")
    assert main(["verify-paper", "--catalog", str(p), "--no-homology", "--no-stretch"]) == 1
    assert "[FAIL]  1." in capsys.readouterr().out


def test_requires_command():
    with pytest.raises(SystemExit):
        main([])
