import numpy as np
import pytest

from cosetlattice import groups as gr
from cosetlattice.complexes import (
    boundary_matrix,
    build_coset_poset,
    chain_counts,
    coset_complex_homology,
    homology,
    is_cohen_macaulay,
    order_complex,
    poset_homology,
    proper_part_connected,
    quillen_reduction_check,
    reduced_euler_characteristic,
)
from cosetlattice.errors import FaceLimitExceeded, NotGraded
from cosetlattice.lattice import build_interval
from cosetlattice.poset import Poset, antichain, boolean_lattice
from cosetlattice.totient import moebius_invariant


def maximal_interval(G, H):
    return build_interval(H, G)


def test_coset_poset_sizes(c6, d8_psl):
    assert len(build_coset_poset(c6, bounded=False)) == 11
    assert len(build_coset_poset(c6, bounded=True)) == 13
    assert len(build_coset_poset(d8_psl, bounded=False)) == 35
    C = build_coset_poset(d8_psl)
    assert C.describe(0) == "empty" and C.describe(len(C) - 1) == "G"


def test_maximal_subgroup_coset_poset():
    S = gr.symmetric(3)
    from cosetlattice.perm import stabilizer

    I = build_interval(stabilizer(S, 0), S)
    C = build_coset_poset(I, bounded=False)
    assert len(C) == 3
    assert not C.poset.lt.any()
    assert not proper_part_connected(build_coset_poset(I))


def test_order_complex():
    inner, _ = boolean_lattice(4).proper_part()
    assert order_complex(inner).f_vector == (1, 14, 36, 24)
    assert chain_counts(inner) == (1, 14, 36, 24)
    K = order_complex(antichain(5))
    assert K.f_vector == (1, 5)


def test_order_complex_c6(c6):
    K = order_complex(build_coset_poset(c6, bounded=False).poset)
    assert K.f_vector == (1, 11, 12)


def test_face_limit(c6):
    with pytest.raises(FaceLimitExceeded):
        order_complex(build_coset_poset(c6, bounded=False).poset, max_faces=10)


def test_boundary_squares_to_zero(d8_psl):
    K = order_complex(build_coset_poset(d8_psl, bounded=False).poset)
    a, b = boundary_matrix(K, 0).to_dense(), boundary_matrix(K, 1).to_dense()
    assert a.shape[1] == b.shape[0]
    assert not (a @ b).any()


def test_homology_sphere():
    inner, _ = boolean_lattice(4).proper_part()
    h = poset_homology(inner)
    assert h.reduced_euler_char == 1
    assert h.betti == (0, 0, 0, 1)
    assert h.betti_at(2) == 1 and h.betti_at(7) == 0


def test_homology_point():
    h = poset_homology(antichain(1))
    assert h.reduced_euler_char == 0
    assert all(b == 0 for b in h.betti)


def test_homology_c6(c6):
    h = coset_complex_homology(c6)
    assert h.betti_at(0) == 0 and h.betti_at(1) == 2
    assert h.reduced_euler_char == -2
    assert moebius_invariant(build_coset_poset(c6).poset) == -2


def test_reduced_euler_characteristic():
    assert reduced_euler_characteristic((1, 14, 36, 24)) == 1
    assert isinstance(reduced_euler_characteristic((1, 3)), int)


def test_connected(c6, d8_psl):
    assert proper_part_connected(build_coset_poset(c6))
    assert proper_part_connected(build_coset_poset(d8_psl))


def test_cohen_macaulay(c6, d8_psl):
    assert is_cohen_macaulay(boolean_lattice(3))
    assert is_cohen_macaulay(build_coset_poset(c6))
    assert is_cohen_macaulay(build_coset_poset(d8_psl))
    assert coset_complex_homology(d8_psl).betti_at(1) == 8


def test_not_cohen_macaulay():
    # bounded extension of two disjoint 2-chains: open interval (0, 1) is disconnected of length 1
    leq = np.eye(4, dtype=bool)
    leq[0, 1] = leq[2, 3] = True
    P = Poset(leq).bounded_extension()
    r = is_cohen_macaulay(P)
    assert not r.value and r.witness is not None


def test_cm_requires_graded():
    leq = np.eye(3, dtype=bool)
    leq[0, 1] = True
    P = Poset(leq).bounded_extension()
    with pytest.raises(NotGraded):
        is_cohen_macaulay(P)


def test_quillen_reduction(c6, s3):
    assert quillen_reduction_check(c6)
    assert quillen_reduction_check(s3)
    G = gr.cyclic(12)
    assert quillen_reduction_check(build_interval(G.trivial(), G))
