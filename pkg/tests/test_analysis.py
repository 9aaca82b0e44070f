import json

import pytest

from cosetlattice import groups as gr
from cosetlattice.analysis import AnalysisOptions, analyze_group, analyze_interval, read_log, scan_catalog, summarize
from cosetlattice.catalog import entry_from_group, find_entry
from cosetlattice.config import set_limits


def small(fixtures):
    return [e for e in fixtures if e.degree <= 8]


def test_analyze_psl(fixtures):
    r = analyze_interval(find_entry(fixtures, 21, 100), AnalysisOptions(cm=True, el=True, homology=True))
    assert r["status"] == "ok"
    assert r["boolean"] and not r["group_complemented"]
    assert (r["phi"], r["phi_hat"], r["coset_poset_mu"]) == (16, 8, -8)
    assert r["cohen_macaulay"] and r["dual_el"] is False and r["dual_el_witness"][0] == "empty"
    assert r["betti"][2] == 8
    json.dumps(r)


def test_analyze_c6_and_c2(fixtures):
    r = analyze_interval(find_entry(fixtures, 6, 1), AnalysisOptions(homology=True, el=True))
    assert r["phi_hat"] == 2 and r["dual_el"] and r["betti"][2] == 2
    r = analyze_interval(find_entry(fixtures, 2, 1))
    assert r["rank"] == 1 and r["phi"] == r["phi_hat"] == 1
    assert r["lambda"]["value"] == 1


def test_over_cap_is_skipped(fixtures):
    set_limits(max_group_order=50)
    r = analyze_interval(find_entry(fixtures, 7, 5))
    assert r["status"] == "skipped"


def test_analyze_group_direct():
    G = gr.dihedral(4)
    r = analyze_group(G, G.trivial(), AnalysisOptions(lam=False))
    assert r["boolean"] is False and r["rank"] is None and "lambda" not in r


def test_scan_boolean_fixtures(fixtures, tmp_path):
    out = tmp_path / "log.jsonl"
    s = scan_catalog(fixtures, filter="boolean", out_path=out, options=AnalysisOptions(cm=True, lam=False))
    assert s["errors"] == 0
    assert s["phi_hat_zero_boolean"] == 0
    assert s["non_cm_boolean"] == 0
    assert s["non_group_complemented_boolean"] == [[21, 100], [28, 100]]
    recs = read_log(out)
    assert [(r["degree"], r["id"]) for r in recs] == sorted((e.degree, e.id) for e in fixtures)


def test_scan_resume(fixtures, tmp_path):
    out = tmp_path / "log.jsonl"
    entries = small(fixtures)
    scan_catalog(entries[:5], out_path=out, options=AnalysisOptions(lam=False))
    first = out.read_text().splitlines()
    s = scan_catalog(entries, out_path=out, options=AnalysisOptions(lam=False))
    lines = out.read_text().splitlines()
    assert lines[:5] == first
    assert len(lines) == len(entries) == s["entries"]
    keys = [(json.loads(l)["degree"], json.loads(l)["id"]) for l in lines]
    assert len(set(keys)) == len(keys)
    # nothing left to do: log unchanged
    scan_catalog(entries, out_path=out, options=AnalysisOptions(lam=False))
    assert out.read_text().splitlines() == lines


def _strip(path):
    recs = read_log(path)
    for r in recs:
        r.pop("seconds", None)
    return recs


def test_scan_parallel_deterministic(fixtures, tmp_path):
    entries = small(fixtures)
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    scan_catalog(list(reversed(entries)), out_path=a, jobs=1)
    scan_catalog(entries, out_path=b, jobs=2)
    assert _strip(a) == _strip(b)


def test_scan_empty_match(tmp_path):
    entries = [entry_from_group(gr.dihedral(4), 3, "D8")]
    out = tmp_path / "e.jsonl"
    s = scan_catalog(entries, filter="boolean", out_path=out)
    assert s["boolean"] == 0 and s["filtered"] == 1 and s["phi_hat_zero_boolean"] == 0


def test_scan_bad_filter(fixtures):
    with pytest.raises(ValueError):
        scan_catalog(fixtures, filter="odd")


def test_summary_rank_conventions():
    recs = [{"status": "ok", "degree": 1, "id": 1, "boolean": True, "rank": 2, "phi": 2, "phi_hat": 2, "group_complemented": True}]
    s = summarize(recs)
    assert s["phi_hat_below_2_rank_minus_1"] == 0 and s["phi_hat_below_2_rank"] == 1
