import numpy as np
import pytest

from cosetlattice.errors import NotGraded
from cosetlattice.poset import Poset, antichain, boolean_lattice, chain_poset, product_poset


def test_boolean_lattice_shape():
    B = boolean_lattice(3)
    assert B.size == 8
    assert len(B.covers()) == 12
    assert B.length() == 3
    assert B.is_bounded()
    assert list(B.rank_function()) == [bin(i).count("1") for i in range(8)]


def test_linear_extension_respects_order():
    P = product_poset(chain_poset(2), boolean_lattice(2))
    pos = np.empty(P.size, dtype=int)
    pos[P.linear_extension()] = np.arange(P.size)
    xs, ys = np.nonzero(P.lt)
    assert (pos[xs] < pos[ys]).all()


def test_dual_and_intervals():
    B = boolean_lattice(3)
    D = B.dual()
    assert (D.leq == B.leq.T).all()
    assert sorted(B.open_interval(0, 7).tolist()) == list(range(1, 7))
    assert sorted(B.closed_interval(1, 7).tolist()) == [1, 3, 5, 7]
    inner, idx = B.proper_part()
    assert inner.size == 6 and sorted(idx.tolist()) == list(range(1, 7))


def test_bounded_extension():
    A = antichain(3)
    assert not A.is_bounded()
    Ah = A.bounded_extension()
    assert Ah.size == 5 and Ah.is_bounded() and Ah.length() == 2


def test_maximal_chains():
    assert len(list(boolean_lattice(3).maximal_chains())) == 6
    assert len(list(chain_poset(4).maximal_chains())) == 1


def test_not_graded():
    # 0 < a < b < 1 and 0 < c < 1
    leq = np.eye(5, dtype=bool)
    for x, y in [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4), (0, 2), (0, 4), (1, 4)]:
        leq[x, y] = True
    P = Poset(leq)
    assert not P.is_graded()
    with pytest.raises(NotGraded):
        P.require_graded()


def test_rejects_cyclic_relation():
    leq = np.ones((2, 2), dtype=bool)
    with pytest.raises(ValueError):
        Poset(leq, check=True)
    leq = np.eye(3, dtype=bool)
    leq[0, 1] = leq[1, 2] = True
    with pytest.raises(ValueError):
        Poset(leq, check=True)
