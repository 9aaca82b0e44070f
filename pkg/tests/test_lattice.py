import pytest

from cosetlattice import groups as gr
from cosetlattice.errors import NotBoolean
from cosetlattice.lattice import (
    boolean_structure,
    build_interval,
    is_boolean,
    is_bottom_boolean,
    is_dedekind,
    is_distributive,
    is_group_complemented,
    is_top_boolean,
    top_bottom,
)
from cosetlattice.verify import product_family


def by_order(I, order):
    return [k for k in range(len(I)) if I.order(k) == order]


def test_members(c6, s3, d8_psl):
    assert sorted(I.order(k) for I in [c6] for k in range(len(I))) == [1, 2, 3, 6]
    assert sorted(s3.order(k) for k in range(len(s3))) == [1, 2, 2, 2, 3, 6]
    assert len(d8_psl) == 4
    assert sorted(d8_psl.order(k) for k in range(4)) == [8, 24, 24, 168]
    # members in linear-extension order: H first, G last
    for I in (c6, s3, d8_psl):
        assert I.order(0) == I.H.order and I.order(I.top_index) == I.G.order


def test_meet_join(c6, s3, d8_psl):
    (a,), (b,) = by_order(c6, 2), by_order(c6, 3)
    assert c6.order(c6.meet(a, b)) == 1
    assert c6.order(c6.join(a, b)) == 6
    assert c6.meet(a, a) == a
    assert c6.join(a, 0) == a
    x, y, _ = by_order(s3, 2)
    assert s3.order(s3.join(x, y)) == 6
    p, q = by_order(d8_psl, 24)
    assert d8_psl.meet(p, q) == 0
    assert (d8_psl.meet_table == d8_psl.meet_table.T).all()


def test_distributive(c6, s3, d8_psl):
    assert is_distributive(c6)
    assert not is_distributive(s3)
    assert is_distributive(d8_psl)


def test_boolean_structure(c6, s3):
    s = boolean_structure(c6)
    assert s.rank == 2
    (a,), (b,) = by_order(c6, 2), by_order(c6, 3)
    assert s.complement[a] == b and s.complement[b] == a
    assert s.complement[0] == c6.top_index
    with pytest.raises(NotBoolean):
        boolean_structure(s3)
    assert not is_boolean(s3)


def test_product_family_rank2():
    I = product_family(1)
    assert boolean_structure(I).rank == 2


def test_top_bottom(c6, s3):
    top, bottom = top_bottom(c6)
    assert len(top) == len(c6) == len(bottom)
    Q = gr.quaternion()
    I = build_interval(Q.trivial(), Q)
    _, bottom = top_bottom(I)
    assert [bottom.order(k) for k in range(len(bottom))] == [1, 2]
    top, _ = top_bottom(s3)
    assert top.order(0) == 1
    assert is_top_boolean(c6) and is_bottom_boolean(I)
    assert not is_top_boolean(s3)


def test_group_complemented(c6, d8_psl, s3_psl):
    assert is_group_complemented(c6)
    assert not is_group_complemented(d8_psl)
    assert not is_group_complemented(s3_psl)
    assert boolean_structure(s3_psl).rank == 2


def test_dedekind(c6, s3, f20_on_10):
    assert is_dedekind(c6)
    assert not is_dedekind(s3)
    assert is_boolean(f20_on_10)
    assert is_group_complemented(f20_on_10)
    assert not is_dedekind(f20_on_10)


def test_sub_interval(c6):
    (a,) = by_order(c6, 2)
    J = c6.sub(a, c6.top_index)
    assert [J.order(k) for k in range(len(J))] == [2, 6]
    assert J.parent is c6.parent
