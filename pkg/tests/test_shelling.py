import pytest

from cosetlattice import groups as gr
from cosetlattice.complexes import build_coset_poset
from cosetlattice.errors import NotBoolean, NotGroupComplemented
from cosetlattice.lattice import boolean_structure, build_interval
from cosetlattice.poset import boolean_lattice
from cosetlattice.shelling import (
    count_decreasing_maximal_chains,
    el_labeling,
    example_boolean_labeling,
    shellability_crosscheck,
    verify_el_labeling,
)
from cosetlattice.verify import product_family


def test_boolean_example_is_el():
    for n in range(1, 5):
        P, L = example_boolean_labeling(n)
        assert verify_el_labeling(P, L)
        assert count_decreasing_maximal_chains(P.dual(), L.dual()) == 1


def test_el_labels_on_c6(c6):
    C = build_coset_poset(c6)
    L = el_labeling(c6, C)
    assert set(L.labels.values()) <= {0, 1, -1, 2, -2}
    for (x, y), v in L.labels.items():
        if C.elements[x][0] is None:
            assert v == 0
    top = len(C) - 1
    s = boolean_structure(c6)
    for (x, y), v in L.labels.items():
        if y == top:
            k = C.elements[x][0]
            j = s.atoms.index(s.complement[k]) + 1
            assert abs(v) == j


def test_dual_el_c6(c6):
    C = build_coset_poset(c6)
    L = el_labeling(c6, C)
    assert verify_el_labeling(C.poset.dual(), L.dual())
    assert count_decreasing_maximal_chains(C.poset.dual(), L.dual()) == 2


def test_dual_el_fails_psl(d8_psl):
    C = build_coset_poset(d8_psl)
    L = el_labeling(d8_psl, C)
    r = verify_el_labeling(C.poset.dual(), L.dual())
    assert not r.value
    top, bottom = r.witness
    assert C.elements[bottom][0] is None


def test_c2_chains():
    G = gr.cyclic(2)
    I = build_interval(G.trivial(), G)
    C = build_coset_poset(I)
    L = el_labeling(I, C)
    assert count_decreasing_maximal_chains(C.poset.dual(), L.dual()) == 1
    s = shellability_crosscheck(I)
    assert s.agree() and s.decreasing_chains == 1


def test_crosscheck(c6):
    s = shellability_crosscheck(c6)
    assert s.agree() and s.decreasing_chains == 2
    s = shellability_crosscheck(product_family(1))
    assert s.agree() and s.phi_hat == 2


def test_crosscheck_preconditions(s3, d8_psl):
    with pytest.raises(NotBoolean):
        shellability_crosscheck(s3)
    with pytest.raises(NotGroupComplemented):
        shellability_crosscheck(d8_psl)


def test_unlabeled_cover_rejected():
    from cosetlattice.shelling import EdgeLabeling

    with pytest.raises(ValueError):
        EdgeLabeling(boolean_lattice(2), {})
