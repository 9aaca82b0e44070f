import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosetlattice import _kernels
from cosetlattice import groups as gr
from cosetlattice.complexes import boundary_matrix, build_coset_poset, coset_complex_homology, order_complex
from cosetlattice.lattice import build_interval
from cosetlattice.totient import moebius_table


@pytest.fixture
def both_backends():
    saved = _kernels.backend()

    def run(fn):
        out = []
        for name in ("numpy", "numba"):
            _kernels.set_backend(name)
            out.append(fn())
        return out

    yield run
    _kernels.set_backend(saved)


def test_env_flag_selects_numpy():
    env = dict(os.environ, COSETLATTICE_NUMBA="0")
    out = subprocess.run(
        [sys.executable, "-c", "from cosetlattice import _kernels; print(_kernels.backend())"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"


def test_set_backend_rejects_unknown():
    with pytest.raises(ValueError):
        _kernels.set_backend("cuda")


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 30).flatmap(lambda n: st.lists(st.permutations(range(n)), min_size=1, max_size=3)))
def test_reach_and_components_agree(perms):
    maps = np.array(perms, dtype=np.int64)
    saved = _kernels.backend()
    try:
        res = []
        for name in ("numpy", "numba"):
            _kernels.set_backend(name)
            res.append((_kernels.reach(maps, 0), _kernels.component_labels(maps)))
    finally:
        _kernels.set_backend(saved)
    (r0, (l0, c0)), (r1, (l1, c1)) = res
    assert (r0 == r1).all() and (l0 == l1).all() and c0 == c1
    # orbit of 0 under the generated group is its component
    assert (r0 == (l0 == l0[0])).all()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=1, max_size=7), min_size=1, max_size=7))
def test_int_rank_agrees_with_float_rank(rows):
    width = max(len(r) for r in rows)
    a = np.array([r + [0] * (width - len(r)) for r in rows], dtype=np.int64)
    saved = _kernels.backend()
    try:
        ranks = []
        for name in ("numpy", "numba"):
            _kernels.set_backend(name)
            ranks.append(_kernels.int_rank(a))
    finally:
        _kernels.set_backend(saved)
    sparse = _kernels.sparse_rank([{j: int(v) for j, v in enumerate(r) if v} for r in a])
    assert ranks[0] == ranks[1] == sparse == np.linalg.matrix_rank(a.astype(float))


def test_rank_overflow_falls_back():
    big = np.array([[2 ** 40, 3], [5, 2 ** 40 + 1], [7, 11]], dtype=np.int64)
    assert _kernels.int_rank(big) == 2
    assert _kernels.int_rank(np.array([[2 ** 40, 2 ** 41], [1, 2]], dtype=np.int64)) == 1


def test_pipeline_agrees(both_backends):
    def run():
        G = gr.general_linear(3, 2)
        I = build_interval(gr.permutation_matrices(G, 3, 2), G)
        C = build_coset_poset(I)
        K = order_complex(C.proper().poset)
        return (
            len(I),
            moebius_table(C.poset).invariant,
            coset_complex_homology(I).betti,
            boundary_matrix(K, 1).shape,
        )

    a, b = both_backends(run)
    assert a == b
