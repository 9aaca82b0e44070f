"""
Test corpus: intervals from the bundled fixtures (degree <= 12) and every interval
[H, G] for H in L(G) over a curated list of groups of order at most 48, with the
property checks run over it.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import groups as gr
from .catalog import load_fixtures
from .complexes import (
    boundary_matrix,
    build_coset_poset,
    chain_counts,
    coset_complex_homology,
    is_cohen_macaulay,
    order_complex,
    reduced_euler_characteristic,
)
from .errors import ConsistencyError, NotBoolean
from .invariants import fixed_point_free_check, is_w_cyclic
from .lattice import build_interval, boolean_structure, is_dedekind, is_group_complemented, top_bottom
from .perm import coset_representatives, join_with, stabilizer
from .totient import (
    coset_poset_moebius,
    crosscut_factorizations,
    dual_euler_totient,
    euler_totient_direct,
    euler_totient_moebius,
    moebius_invariant,
)


def small_groups():
    """(name, group) pairs of order <= 48; a curated list, not every group of that order."""
    out = [(f"C{n}", gr.cyclic(n)) for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 18, 24, 30, 36, 48)]
    out += [(f"D{2 * n}", gr.dihedral(n)) for n in (3, 4, 5, 6, 7, 8, 9, 10, 12)]
    out += [
        ("E4", gr.dihedral(2)),
        ("E8", gr.elementary_abelian(2, 3)),
        ("E16", gr.elementary_abelian(2, 4)),
        ("E9", gr.elementary_abelian(3, 2)),
        ("E25", gr.elementary_abelian(5, 2)),
        ("Q8", gr.quaternion()),
        ("Q16", gr.dicyclic(4)),
        ("Dic3", gr.dicyclic(3)),
        ("Dic5", gr.dicyclic(5)),
        ("Dic6", gr.dicyclic(6)),
        ("A4", gr.alternating(4)),
        ("S4", gr.symmetric(4)),
        ("SL(2,3)", gr.special_linear(2, 3)),
        ("GL(2,3)", gr.general_linear(2, 3)),
        ("F20", gr.affine(5)),
        ("F21", gr.affine(7, 3)),
        ("F42", gr.affine(7)),
        ("C4xC2", gr.direct_product(gr.cyclic(4), gr.cyclic(2))),
        ("C4xC4", gr.direct_product(gr.cyclic(4), gr.cyclic(4))),
        ("C6xC2", gr.direct_product(gr.cyclic(6), gr.cyclic(2))),
        ("C2xS3", gr.direct_product(gr.cyclic(2), gr.symmetric(3))),
        ("C3xS3", gr.direct_product(gr.cyclic(3), gr.symmetric(3))),
        ("S3xS3", gr.direct_product(gr.symmetric(3), gr.symmetric(3))),
        ("C2xA4", gr.direct_product(gr.cyclic(2), gr.alternating(4))),
        ("C2xS4", gr.direct_product(gr.cyclic(2), gr.symmetric(4))),
        ("C2xQ8", gr.direct_product(gr.cyclic(2), gr.quaternion())),
        ("C2xD8", gr.direct_product(gr.cyclic(2), gr.dihedral(4))),
        ("C3xQ8", gr.direct_product(gr.cyclic(3), gr.quaternion())),
        ("C5xS3", gr.direct_product(gr.cyclic(5), gr.symmetric(3))),
    ]
    return out


def corpus_intervals(max_fixture_degree: int = 12):
    """Yield (label, interval) over the whole corpus."""
    for e in load_fixtures():
        if e.degree > max_fixture_degree:
            continue
        G = e.group()
        I = build_interval(stabilizer(G, 0), G)
        for k in range(len(I)):
            yield f"T({e.degree},{e.id})[{k},top]", I.sub(k, I.top_index)
    for name, G in small_groups():
        L = build_interval(G.trivial(), G)
        for k, H in enumerate(L.members):
            yield f"{name}[{k}]", L.sub(k, L.top_index)


@dataclass
class PropertyReport:
    intervals: int = 0
    checks: Counter = field(default_factory=Counter)
    skipped: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


def _boundary_square_zero(K) -> bool:
    for d in range(1, len(K.faces) - 1):
        a = boundary_matrix(K, d - 1)
        b = boundary_matrix(K, d)
        if a.shape[1] == 0 or b.shape[1] == 0:
            continue
        if a.shape[0] * a.shape[1] + b.shape[0] * b.shape[1] > 4_000_000:
            return True
        if np.any(a.to_dense() @ b.to_dense()):
            return False
    return True


def check_interval_properties(label, I, report: PropertyReport, homology_faces: int = 60_000) -> None:
    def record(name, ok, detail=""):
        report.checks[name] += 1
        if not ok:
            report.failures.append((label, name, detail))

    phi = euler_totient_direct(I.H, I.G)
    record("phi_direct_equals_moebius", phi == euler_totient_moebius(I))
    phis = np.array([euler_totient_moebius(I.sub(0, l)) for l in range(len(I))], dtype=object)
    hall = all(phis[I.leq[:, k]].sum() == I.order(k) // I.order(0) for k in range(len(I)))
    record("hall_identity", hall)
    try:
        crosscut_factorizations(I)
        record("crosscut_factorizations", True)
    except ConsistencyError as err:
        record("crosscut_factorizations", False, str(err))

    phi_hat = dual_euler_totient(I)
    mu_c = coset_poset_moebius(I)
    Cb = build_coset_poset(I, bounded=True)
    record("coset_moebius_formula", mu_c == moebius_invariant(Cb.poset))
    proper = build_coset_poset(I, bounded=False)
    f = chain_counts(proper.poset)
    record("moebius_equals_euler_char", moebius_invariant(Cb.poset) == reduced_euler_characteristic(f))

    try:
        s = boolean_structure(I)
    except NotBoolean:
        s = None
    gc = None
    if s is not None:
        gc = is_group_complemented(I)
        record("boolean_w_cyclic_phi_positive", bool(is_w_cyclic(I)) and phi > 0)
        sign = -1 if s.rank % 2 else 1
        record("boolean_sign_identity", mu_c == -sign * phi_hat)
        if s.rank == 2:
            record("rank2_phi_hat_positive", phi_hat >= 1)
        if is_dedekind(I):
            record("dedekind_boolean_group_complemented", gc)
        if gc:
            record("group_complemented_phi_hat_equals_phi", phi_hat == phi)

    # fixed-point-free identity on generating coset representatives
    G = I.G
    gens = [int(g) for g in coset_representatives(I.H, G) if join_with(I.H, int(g)).order == G.order]
    for x in gens[:4]:
        try:
            fixed_point_free_check(I, x)
            record("fixed_point_free_two_sides", True)
        except ConsistencyError as err:
            record("fixed_point_free_two_sides", False, str(err))

    if sum(f) > homology_faces:
        report.skipped["homology"] += 1
        return
    K = order_complex(proper.poset)
    record("boundary_squared_zero", _boundary_square_zero(K))
    try:
        h = coset_complex_homology(I)
        record("euler_poincare", True)
    except ConsistencyError as err:
        record("euler_poincare", False, str(err))
        return
    top, _ = top_bottom(I)
    if len(top) != len(I):
        if sum(chain_counts(build_coset_poset(top, bounded=False).poset)) > homology_faces:
            report.skipped["quillen"] += 1
        else:
            a, b = h.betti, coset_complex_homology(top).betti
            n = max(len(a), len(b))
            record("quillen_reduction", a + (0,) * (n - len(a)) == b + (0,) * (n - len(b)))
    if s is not None and gc:
        cm = is_cohen_macaulay(Cb)
        d = s.rank - 1
        record("group_complemented_cohen_macaulay", cm.value and h.betti_at(d) == phi, f"betti={h.betti}")


def run_property_suite(max_fixture_degree: int = 12, homology_faces: int = 60_000, progress=None) -> PropertyReport:
    report = PropertyReport()
    t0 = time.perf_counter()
    for label, I in corpus_intervals(max_fixture_degree):
        report.intervals += 1
        check_interval_properties(label, I, report, homology_faces)
        if progress is not None:
            progress(label, report)
    report.seconds = time.perf_counter() - t0
    return report
