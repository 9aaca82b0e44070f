"""
Compare the numba and numpy backends of the hot kernels on inputs taken from
real workloads (GL(4,2) of order 20160 and the Borel coset poset inside it).

    python3 benchmarks/bench_kernels.py [--repeat 5]

JIT compilation is excluded: every kernel is called once per backend before timing.
"""

import argparse
import time

import numpy as np

from cosetlattice import _kernels
from cosetlattice import groups as gr
from cosetlattice.complexes import boundary_matrix, build_coset_poset, order_complex
from cosetlattice.lattice import build_interval


def workloads():
    G = gr.general_linear(4, 2)
    B = gr.unitriangular(G, 4, 2)
    rng = np.random.default_rng(0)
    picks = [int(x) for x in rng.choice(np.arange(1, G.order), size=2, replace=False)]
    rmaps = np.stack([G.rmul(g) for g in picks])
    bmaps = np.stack([G.lmul(int(g)) for g in B.gens])
    I = build_interval(B, G)
    C = build_coset_poset(I, bounded=True)
    P = C.poset
    order = P.linear_extension()
    lt = P.lt[np.ix_(order, order)]
    K = order_complex(build_coset_poset(I, bounded=False).poset)
    D = boundary_matrix(K, 1).to_dense()
    return {
        "reach (closure in GL(4,2))": lambda: _kernels.reach(rmaps, 0),
        "component_labels (Borel cosets)": lambda: _kernels.component_labels(bmaps, G.order),
        f"moebius_inverse ({P.size} x {P.size})": lambda: _kernels.moebius_inverse(lt),
        f"int_rank ({D.shape[0]} x {D.shape[1]})": lambda: _kernels.int_rank(D),
    }


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    jobs = workloads()
    times = {}
    for name in ("numpy", "numba"):
        _kernels.set_backend(name)
        results = {k: fn() for k, fn in jobs.items()}  # warm-up and result capture
        times[name] = ({k: bench(fn, args.repeat) for k, fn in jobs.items()}, results)
    ref = times["numpy"][1]
    print(f"{'kernel':42} {'numpy [ms]':>12} {'numba [ms]':>12} {'speedup':>8}  same")
    for k in jobs:
        a, b = times["numpy"][0][k], times["numba"][0][k]
        same = _same(ref[k], times["numba"][1][k])
        print(f"{k:42} {a * 1e3:12.2f} {b * 1e3:12.2f} {a / b:8.1f}x  {same}")


def _same(x, y):
    if isinstance(x, tuple):
        return all(_same(a, b) for a, b in zip(x, y))
    return bool(np.array_equal(np.asarray(x), np.asarray(y)))


if __name__ == "__main__":
    main()
