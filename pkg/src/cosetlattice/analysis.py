"""
Per-entry analysis of the interval [G_0, G] (point stabilizer up to G) and catalog scans.

Records are plain dicts, written one JSON object per line (see docs/results_schema.md).
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from .catalog import CatalogEntry
from .complexes import build_coset_poset, coset_complex_homology, is_cohen_macaulay
from .config import Limits, limits, set_limits
from .errors import ConsistencyError, CosetLatticeError, EnumerationLimitExceeded, FaceLimitExceeded, NotBoolean
from .invariants import is_core_free, is_strongly_w_cyclic, is_w_cyclic, lambda_
from .lattice import (
    SubgroupInterval,
    boolean_structure,
    build_interval,
    is_dedekind,
    is_distributive,
    is_group_complemented,
    is_top_boolean,
)
from .perm import stabilizer
from .shelling import el_labeling, verify_el_labeling
from .totient import euler_totient_moebius, totient_report

log = logging.getLogger(__name__)

SCHEMA = 1


@dataclass(frozen=True)
class AnalysisOptions:
    homology: bool = False
    cm: bool = False
    el: bool = False
    lam: bool = True


def check_interval(I: SubgroupInterval, rep=None, gc=None) -> None:
    """Cross-module identities that must hold on every interval; raise on failure."""
    rep = rep or totient_report(I)
    try:
        s = boolean_structure(I)
    except NotBoolean:
        s = None
    if s is not None:
        if gc is None:
            gc = is_group_complemented(I)
        if rep.phi_direct <= 0:
            raise ConsistencyError("Boolean interval with φ <= 0")
        if gc and rep.phi_hat != rep.phi_direct:
            raise ConsistencyError("group-complemented interval with φ̂ != φ")
        if s.rank == 2 and rep.phi_hat < 1:
            raise ConsistencyError("rank-2 Boolean interval with φ̂ < 1")
        if not gc and is_dedekind(I):
            raise ConsistencyError("Dedekind Boolean interval that is not group-complemented")
    if is_top_boolean(I) and not is_w_cyclic(I):
        raise ConsistencyError("top Boolean interval that is not w-cyclic")
    # Hall identity at the top: Σ_{L} φ(H, L) = |G : H|
    total = sum(euler_totient_moebius(I.sub(0, k)) for k in range(len(I)))
    if total != I.index:
        raise ConsistencyError(f"Hall identity fails: {total} != {I.index}")


def analyze_group(G, H, options: AnalysisOptions = AnalysisOptions()) -> dict:
    t0 = time.perf_counter()
    I = build_interval(H, G)
    rep = totient_report(I)
    try:
        s = boolean_structure(I)
        rank = s.rank
    except NotBoolean:
        s, rank = None, None
    gc = is_group_complemented(I) if s is not None else None
    wc = is_w_cyclic(I)
    swc = is_strongly_w_cyclic(I)
    if swc and not wc:
        raise ConsistencyError("strongly w-cyclic but not w-cyclic")
    check_interval(I, rep, gc)
    rec = {
        "members": len(I),
        "member_orders": [int(o) for o in I.orders],
        "index": I.index,
        "order": I.G.order,
        "boolean": s is not None,
        "rank": rank,
        "distributive": is_distributive(I),
        "group_complemented": gc,
        "dedekind": is_dedekind(I),
        "w_cyclic": wc.value,
        "strongly_w_cyclic": swc.value,
        "core_free": is_core_free(I.H, I.G),
        "phi": rep.phi_direct,
        "phi_hat": rep.phi_hat,
        "coset_poset_mu": rep.coset_poset_mu,
    }
    if options.homology:
        try:
            h = coset_complex_homology(I)
            rec["f_vector"] = list(h.f_vector)
            rec["betti"] = list(h.betti)
        except FaceLimitExceeded as err:
            rec["homology_skipped"] = str(err)
    if options.cm:
        try:
            cm = is_cohen_macaulay(build_coset_poset(I, bounded=True))
            rec["cohen_macaulay"] = cm.value
        except CosetLatticeError as err:
            rec["cohen_macaulay"] = None
            rec["cm_skipped"] = f"{err.code}: {err}"
    if options.el and s is not None:
        C = build_coset_poset(I, bounded=True)
        L = el_labeling(I, C)
        r = verify_el_labeling(C.poset.dual(), L.dual())
        if r.value != gc:
            raise ConsistencyError("dual EL verification disagrees with group-complementedness")
        rec["dual_el"] = r.value
        if r.witness is not None:
            rec["dual_el_witness"] = [C.describe(r.witness[1]), C.describe(r.witness[0])]
    if options.lam:
        rec["lambda"] = lambda_(I).as_dict()
    rec["seconds"] = round(time.perf_counter() - t0, 4)
    return rec


def analyze_interval(entry: CatalogEntry, options: AnalysisOptions = AnalysisOptions()) -> dict:
    """Analyze [stabilizer of point 0, G].  Over-cap groups are reported as skipped."""
    base = {"schema": SCHEMA, "degree": entry.degree, "id": entry.id, "name": entry.name}
    try:
        G = entry.group()
    except EnumerationLimitExceeded as err:
        return {**base, "status": "skipped", "reason": str(err)}
    H = stabilizer(G, 0)
    rec = analyze_group(G, H, options)
    return {**base, "status": "ok", **rec}


def _boolean_filter(entry: CatalogEntry) -> bool | None:
    """True/False, or None when the group is over the cap."""
    try:
        G = entry.group()
    except EnumerationLimitExceeded:
        return None
    try:
        boolean_structure(build_interval(stabilizer(G, 0), G))
    except NotBoolean:
        return False
    return True


def _work(args):
    entry, options, filt, lim = args
    set_limits(**asdict(lim))
    base = {"schema": SCHEMA, "degree": entry.degree, "id": entry.id, "name": entry.name}
    try:
        if filt == "boolean":
            keep = _boolean_filter(entry)
            if keep is False:
                return {**base, "status": "filtered"}
        return analyze_interval(entry, options)
    except CosetLatticeError as err:
        return {**base, "status": "error", "error": err.code, "message": str(err)}


def read_log(path) -> list[dict]:
    p = Path(path)
    if not p.exists():
        return []
    out = []
    for line in p.read_text().splitlines():
        if line.strip():
            out.append(json.loads(line))
    return out


def summarize(records) -> dict:
    ok = [r for r in records if r.get("status") == "ok"]
    boolean = [r for r in ok if r["boolean"]]
    summary = {
        "entries": len(records),
        "analyzed": len(ok),
        "filtered": sum(r.get("status") == "filtered" for r in records),
        "skipped": sum(r.get("status") == "skipped" for r in records),
        "errors": sum(r.get("status") == "error" for r in records),
        "boolean": len(boolean),
        "phi_hat_zero_boolean": sum(r["phi_hat"] == 0 for r in boolean),
        # lower bound 2^m for rank m + 1 (shifted) and 2^rank (literal)
        "phi_hat_below_2_rank_minus_1": sum(r["phi_hat"] < 2 ** max(r["rank"] - 1, 0) for r in boolean),
        "phi_hat_below_2_rank": sum(r["phi_hat"] < 2 ** r["rank"] for r in boolean),
        "phi_below_2_rank_minus_1": sum(r["phi"] < 2 ** max(r["rank"] - 1, 0) for r in boolean),
        "phi_below_2_rank": sum(r["phi"] < 2 ** r["rank"] for r in boolean),
        "non_cm_boolean": sum(r.get("cohen_macaulay") is False for r in boolean),
        "non_group_complemented_boolean": [[r["degree"], r["id"]] for r in boolean if not r["group_complemented"]],
    }
    return summary


def scan_catalog(entries, filter=None, jobs: int = 1, out_path=None, options: AnalysisOptions = AnalysisOptions(cm=True)) -> dict:
    """Analyze entries, appending one record per entry to ``out_path``.

    Entries already present in the log are not recomputed.  The log is rewritten at
    the end sorted by (degree, id) so output does not depend on worker order.
    """
    if filter not in (None, "boolean"):
        raise ValueError(f"unknown filter {filter!r}")
    old = read_log(out_path) if out_path else []
    done = {(r["degree"], r["id"]) for r in old}
    todo = [e for e in entries if e.key not in done]
    lim: Limits = limits()
    args = [(e, options, filter, lim) for e in todo]
    new = []
    handle = open(out_path, "a") if out_path else None
    try:
        if jobs > 1 and len(args) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = pool.map(_work, args)
                for r in results:
                    new.append(r)
                    if handle:
                        handle.write(json.dumps(r) + "\n")
                        handle.flush()
        else:
            for a in args:
                r = _work(a)
                new.append(r)
                if handle:
                    handle.write(json.dumps(r) + "\n")
                    handle.flush()
    finally:
        if handle:
            handle.close()
    records = sorted(old + new, key=lambda r: (r["degree"], r["id"]))
    if out_path:
        Path(out_path).write_text("".join(json.dumps(r) + "\n" for r in records))
    for r in new:
        if r["status"] == "error":
            log.warning("entry (%s, %s) failed: %s", r["degree"], r["id"], r["message"])
    return summarize(records)
