"""
Hot inner loops.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy version
computing the same result.  The numba path is used when numba imports and the
environment variable ``COSETLATTICE_NUMBA`` is not set to ``0``/``false``/``off``.
``set_backend`` switches at runtime (the benchmark uses it).

Kernels:

- ``reach``: breadth-first closure of a start id under integer maps
  (subgroup generation inside an enumerated parent);
- ``component_labels``: connected components of the union of integer maps,
  numbered by smallest member (coset labelling);
- ``moebius_inverse``: inverse of a unitriangular 0/1 zeta matrix;
- ``int_rank``: exact rank of an integer matrix by fraction-free elimination.
"""

import math
import os

import numpy as np

try:
    import numba
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_FLAG = os.environ.get("COSETLATTICE_NUMBA", "1").strip().lower()
_USE_NUMBA = numba is not None and _FLAG not in ("0", "false", "no", "off")

# entries stay below this magnitude in the int64 paths; above it we switch to Python ints
_BOUND = float(2 ** 61)


class _Overflow(Exception):
    pass


def backend():
    return "numba" if _USE_NUMBA else "numpy"


def set_backend(name):
    global _USE_NUMBA
    if name == "numba":
        if numba is None:
            raise RuntimeError("numba is not installed")
        _USE_NUMBA = True
    elif name == "numpy":
        _USE_NUMBA = False
    else:
        raise ValueError(name)


# --------------------------------------------------------------------------
# reach


def _reach_np(maps, start):
    n = maps.shape[1]
    mask = np.zeros(n, dtype=bool)
    mask[start] = True
    frontier = np.array([start], dtype=np.int64)
    while frontier.size:
        nxt = np.unique(maps[:, frontier].ravel())
        nxt = nxt[~mask[nxt]]
        mask[nxt] = True
        frontier = nxt
    return mask


# --------------------------------------------------------------------------
# component labels


def _components_np(maps):
    k, n = maps.shape
    label = np.arange(n, dtype=np.int64)
    if k == 0:
        return label, n
    while True:
        new = label.copy()
        for j in range(k):
            # x ~ maps[j, x]: propagate the minimum both ways
            np.minimum(new, new[maps[j]], out=new)
            np.minimum.at(new, maps[j], new)
        # pointer jumping
        while True:
            jumped = new[new]
            if np.array_equal(jumped, new):
                break
            new = jumped
        if np.array_equal(new, label):
            break
        label = new
    mins, inv = np.unique(label, return_inverse=True)
    return inv.astype(np.int64), len(mins)


# --------------------------------------------------------------------------
# Moebius inverse of a zeta matrix


def _moebius_np(lt):
    m = lt.shape[0]
    ltf = lt.astype(np.float64)
    lti = lt.astype(np.int64)
    mu = np.zeros((m, m), dtype=np.int64)
    for y in range(m):
        col = lti[:y, y]
        if y:
            # |mu[x, y]| <= sum_z |mu[x, z]|; guard before the int64 product
            est = np.abs(mu[:, :y]).astype(np.float64) @ ltf[:y, y]
            if est.max(initial=0.0) > _BOUND:
                raise _Overflow
            mu[:, y] = -(mu[:, :y] @ col)
        mu[y, y] = 1
    return mu


def _moebius_py(lt):
    m = lt.shape[0]
    preds = [np.flatnonzero(lt[:, y]).tolist() for y in range(m)]
    mu = np.zeros((m, m), dtype=object)
    for y in range(m):
        for x in range(m):
            if x == y:
                mu[x, y] = 1
            elif lt[x, y]:
                mu[x, y] = -sum(mu[x, z] for z in preds[y] if z == x or lt[x, z])
            else:
                mu[x, y] = 0
    return mu


# --------------------------------------------------------------------------
# exact integer rank


def _rank_np(a):
    """Forward fraction-free elimination; works for int64 (guarded) and object arrays."""
    a = a.copy()
    rows, cols = a.shape
    exact = a.dtype == object
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = a[r:, c]
        nz = np.flatnonzero(col != 0)
        if nz.size == 0:
            continue
        vals = np.abs(col[nz]).astype(np.float64) if not exact else np.array([abs(v) for v in col[nz]], dtype=object)
        p = r + nz[int(np.argmin(vals))]
        if p != r:
            a[[r, p]] = a[[p, r]]
        piv = a[r, c]
        below = r + 1 + np.flatnonzero(a[r + 1:, c] != 0)
        if below.size:
            coef = a[below, c]
            if exact:
                g = np.array([math.gcd(int(piv), int(v)) for v in coef], dtype=object)
            else:
                g = np.gcd(coef, piv)
            pf = piv // g
            af = coef // g
            if not exact:
                big_r = float(np.abs(a[r, c:]).max())
                big_i = np.abs(a[below, c:]).max(axis=1).astype(np.float64)
                if (np.abs(pf).astype(np.float64) * big_i + np.abs(af).astype(np.float64) * big_r).max() > _BOUND:
                    raise _Overflow
            block = pf[:, None] * a[below, c:] - af[:, None] * a[r, c:][None, :]
            if block.shape[1] > 1:
                if exact:
                    cont = np.array([math.gcd(*[int(v) for v in row]) for row in block], dtype=object)
                else:
                    cont = np.gcd.reduce(block, axis=1)
                cont[cont == 0] = 1
                block = block // cont[:, None]
            a[below, c:] = block
        r += 1
    return r


def _rank_sparse(rows_list):
    """Exact rank of a matrix given as a list of {col: value} rows (Python ints)."""
    basis = {}
    for row in rows_list:
        v = {c: x for c, x in row.items() if x}
        while v:
            lead = min(v)
            b = basis.get(lead)
            if b is None:
                g = 0
                for x in v.values():
                    g = math.gcd(g, x)
                if g > 1:
                    v = {c: x // g for c, x in v.items()}
                basis[lead] = v
                break
            bl, vl = b[lead], v[lead]
            g = math.gcd(bl, vl)
            fb, fv = vl // g, bl // g
            new = {c: fv * x for c, x in v.items()}
            for c, x in b.items():
                y = new.get(c, 0) - fb * x
                if y:
                    new[c] = y
                else:
                    new.pop(c, None)
            g = 0
            for x in new.values():
                g = math.gcd(g, x)
            if g > 1:
                new = {c: x // g for c, x in new.items()}
            v = new
    return len(basis)


if numba is not None:

    @njit(cache=True)
    def _reach_nb(maps, start):
        k, n = maps.shape
        mask = np.zeros(n, dtype=np.bool_)
        queue = np.empty(n, dtype=np.int64)
        mask[start] = True
        queue[0] = start
        head = 0
        tail = 1
        while head < tail:
            x = queue[head]
            head += 1
            for j in range(k):
                y = maps[j, x]
                if not mask[y]:
                    mask[y] = True
                    queue[tail] = y
                    tail += 1
        return mask

    @njit(cache=True)
    def _components_nb(maps):
        k, n = maps.shape
        label = np.full(n, -1, dtype=np.int64)
        # adjacency is symmetric once inverse maps are followed; build reverse lists
        rev_ptr = np.zeros(n + 1, dtype=np.int64)
        for j in range(k):
            for x in range(n):
                rev_ptr[maps[j, x] + 1] += 1
        for x in range(n):
            rev_ptr[x + 1] += rev_ptr[x]
        fill = rev_ptr[:-1].copy()
        rev = np.empty(k * n, dtype=np.int64)
        for j in range(k):
            for x in range(n):
                y = maps[j, x]
                rev[fill[y]] = x
                fill[y] += 1
        queue = np.empty(n, dtype=np.int64)
        count = 0
        for s in range(n):
            if label[s] >= 0:
                continue
            label[s] = count
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                x = queue[head]
                head += 1
                for j in range(k):
                    y = maps[j, x]
                    if label[y] < 0:
                        label[y] = count
                        queue[tail] = y
                        tail += 1
                for t in range(rev_ptr[x], rev_ptr[x + 1]):
                    y = rev[t]
                    if label[y] < 0:
                        label[y] = count
                        queue[tail] = y
                        tail += 1
            count += 1
        return label, count

    @njit(cache=True)
    def _moebius_nb(lt):
        m = lt.shape[0]
        mu = np.zeros((m, m), dtype=np.int64)
        absum = np.zeros(m, dtype=np.float64)
        for y in range(m):
            mu[y, y] = 1
        for y in range(m):
            for x in range(y):
                if not lt[x, y]:
                    continue
                s = 0
                est = 0.0
                for z in range(x, y):
                    if lt[z, y] and (z == x or lt[x, z]):
                        v = mu[x, z]
                        est += abs(v)
                        s += v
                if est > 2.0 ** 61:
                    return mu, False
                mu[x, y] = -s
        return mu, True

    @njit(cache=True)
    def _rank_nb(a):
        rows, cols = a.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            p = -1
            best = 0
            for i in range(r, rows):
                v = abs(a[i, c])
                if v != 0 and (p < 0 or v < best):
                    p = i
                    best = v
                    if v == 1:
                        break
            if p < 0:
                continue
            if p != r:
                for j in range(c, cols):
                    t = a[r, j]
                    a[r, j] = a[p, j]
                    a[p, j] = t
            piv = a[r, c]
            big_r = 0
            for j in range(c, cols):
                v = abs(a[r, j])
                if v > big_r:
                    big_r = v
            for i in range(r + 1, rows):
                coef = a[i, c]
                if coef == 0:
                    continue
                x = abs(piv)
                y = abs(coef)
                while y:
                    x, y = y, x % y
                pf = piv // x
                af = coef // x
                big_i = 0
                for j in range(c, cols):
                    v = abs(a[i, j])
                    if v > big_i:
                        big_i = v
                if abs(pf) * float(big_i) + abs(af) * float(big_r) > 2.0 ** 61:
                    return -1
                g = 0
                for j in range(c, cols):
                    v = pf * a[i, j] - af * a[r, j]
                    a[i, j] = v
                    if v != 0:
                        w = abs(v)
                        while w:
                            g, w = w, g % w
                if g > 1:
                    for j in range(c, cols):
                        a[i, j] //= g
            r += 1
        return r


# --------------------------------------------------------------------------
# public dispatchers


def reach(maps, start=0):
    """Boolean mask of ids reachable from ``start`` by repeatedly applying the rows of ``maps``."""
    maps = np.ascontiguousarray(maps, dtype=np.int64)
    if maps.shape[0] == 0:
        mask = np.zeros(maps.shape[1], dtype=bool)
        mask[start] = True
        return mask
    if _USE_NUMBA:
        return _reach_nb(maps, start)
    return _reach_np(maps, start)


def component_labels(maps, n=None):
    """Label connected components of the graph with edges ``x -- maps[j, x]``.

    Components are numbered in increasing order of their smallest member.
    Returns ``(labels, count)``.
    """
    maps = np.ascontiguousarray(maps, dtype=np.int64)
    if maps.shape[0] == 0:
        size = maps.shape[1] if n is None else n
        return np.arange(size, dtype=np.int64), size
    if _USE_NUMBA:
        label, count = _components_nb(maps)
        return label, int(count)
    return _components_np(maps)


def moebius_inverse(lt):
    """Inverse of ``I + lt`` for a strict order matrix in linear-extension order.

    Returns an int64 array, or an object array of Python ints when int64 would overflow.
    """
    lt = np.ascontiguousarray(lt, dtype=np.bool_)
    m = lt.shape[0]
    if m == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if _USE_NUMBA:
        mu, ok = _moebius_nb(lt)
        if ok:
            return mu
    else:
        try:
            return _moebius_np(lt)
        except _Overflow:
            pass
    return _moebius_py(lt)


def int_rank(a):
    """Exact rank over the rationals of an integer matrix (numpy array)."""
    a = np.asarray(a)
    if a.size == 0:
        return 0
    if a.dtype != object:
        work = np.array(a, dtype=np.int64, order="C")
        if _USE_NUMBA:
            r = _rank_nb(work)
            if r >= 0:
                return int(r)
        else:
            try:
                return _rank_np(work)
            except _Overflow:
                pass
    return _rank_np(np.array(a, dtype=object))


def sparse_rank(rows_list):
    """Exact rank of a list of sparse rows ``{col: int}``."""
    return _rank_sparse(rows_list)


def warmup():
    """Call every kernel once on tiny inputs so JIT compilation is not timed later."""
    maps = np.array([[1, 0, 2]], dtype=np.int64)
    reach(maps, 0)
    component_labels(maps)
    moebius_inverse(np.array([[False, True], [False, False]]))
    int_rank(np.array([[1, 2], [3, 4]], dtype=np.int64))
