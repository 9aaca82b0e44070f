"""Randomized identities over intervals [H, G] with H generated by random elements."""

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from cosetlattice import groups as gr
from cosetlattice.complexes import build_coset_poset, chain_counts, coset_complex_homology, reduced_euler_characteristic
from cosetlattice.corpus import PropertyReport, check_interval_properties
from cosetlattice.errors import NotBoolean, NotBounded
from cosetlattice.invariants import is_w_cyclic, lambda_
from cosetlattice.lattice import boolean_structure, build_interval, is_group_complemented, is_top_boolean
from cosetlattice.perm import coset_generates, right_cosets
from cosetlattice.poset import Poset, boolean_lattice
from cosetlattice.totient import (
    coset_poset_moebius,
    dual_euler_totient,
    euler_totient_direct,
    euler_totient_moebius,
    moebius_invariant,
    moebius_table,
)

GROUPS = {
    "S4": gr.symmetric(4),
    "D12": gr.dihedral(6),
    "A4": gr.alternating(4),
    "C12": gr.cyclic(12),
    "Q8": gr.quaternion(),
    "F20": gr.affine(5),
    "C2xS3": gr.direct_product(gr.cyclic(2), gr.symmetric(3)),
}
SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def intervals(draw):
    name = draw(st.sampled_from(sorted(GROUPS)))
    G = GROUPS[name]
    gens = draw(st.lists(st.integers(0, G.order - 1), max_size=2))
    return build_interval(G.closure(gens), G)


@SETTINGS
@given(intervals())
def test_totient_identities(I):
    phi = euler_totient_direct(I.H, I.G)
    assert phi == euler_totient_moebius(I)
    # brute-force count of generating cosets
    brute = sum(coset_generates(I.H, c.rep_id, I.G) for c in right_cosets(I.H, I.G))
    assert brute == phi
    # Hall: sum over the interval of phi(H, K) is |G:H|
    assert sum(euler_totient_moebius(I.sub(0, k)) for k in range(len(I))) == I.index


@SETTINGS
@given(intervals())
def test_coset_poset_moebius_is_euler_char(I):
    C = build_coset_poset(I)
    mu = moebius_invariant(C.poset)
    assert mu == coset_poset_moebius(I)
    assert mu == reduced_euler_characteristic(chain_counts(C.proper().poset))


@SETTINGS
@given(intervals())
def test_boolean_implications(I):
    try:
        s = boolean_structure(I)
    except NotBoolean:
        return
    phi, phi_hat = euler_totient_direct(I.H, I.G), dual_euler_totient(I)
    assert phi > 0 and is_w_cyclic(I)
    assert coset_poset_moebius(I) == -((-1) ** s.rank) * phi_hat
    if is_group_complemented(I):
        assert phi_hat == phi
        assert coset_complex_homology(I).betti_at(s.rank - 1) == phi


@SETTINGS
@given(intervals())
def test_top_boolean_is_w_cyclic(I):
    if is_top_boolean(I):
        assert is_w_cyclic(I)


@SETTINGS
@given(intervals())
def test_lambda_chain_is_admissible(I):
    r = lambda_(I)
    if r.value is None:
        return
    assert r.orders[0] == I.H.order and r.orders[-1] == I.G.order
    assert len(r.steps) == r.value
    assert all(st.bottom_boolean and st.phi_hat != 0 for st in r.steps)


@SETTINGS
@given(intervals())
def test_corpus_checks_pass(I):
    rep = PropertyReport()
    check_interval_properties("random", I, rep)
    assert rep.ok, rep.failures


@pytest.mark.parametrize("n", range(0, 7))
def test_boolean_moebius(n):
    assert moebius_invariant(boolean_lattice(n)) == (-1) ** n


def test_moebius_inversion_abstract():
    rng = np.random.default_rng(3)
    for _ in range(10):
        n = 7
        lt = np.triu(rng.random((n, n)) < 0.4, 1)
        # transitive closure
        leq = lt | np.eye(n, dtype=bool)
        for _ in range(n):
            leq = (leq.astype(int) @ leq.astype(int)) > 0
        P = Poset(leq).bounded_extension()
        T = moebius_table(P)
        m = P.size
        zeta = P.leq.astype(int)
        mu = np.array([[T.mu(x, y) for y in range(m)] for x in range(m)])
        assert (mu @ zeta == np.eye(m, dtype=int)).all()
    with pytest.raises(NotBounded):
        moebius_table(Poset(np.eye(2, dtype=bool)))
