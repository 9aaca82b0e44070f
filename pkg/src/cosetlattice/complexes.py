"""
Coset posets C(H,G) and their bounded extensions, order complexes, exact rational
homology and a direct Cohen-Macaulay check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .config import limits
from .errors import ConsistencyError, FaceLimitExceeded
from .lattice import SubgroupInterval, top_bottom
from .perm import coset_representatives
from .poset import Poset


class CosetPoset:
    """Right cosets Kg, K ∈ [H, G), ordered by inclusion.

    ``elements[i]`` is ``(member index, canonical representative id)``.  In the
    bounded variant element 0 is the empty set (``(None, None)``) and the last
    element is G itself.
    """

    def __init__(self, interval: SubgroupInterval, elements, poset: Poset, bounded: bool):
        self.interval = interval
        self.elements = elements
        self.poset = poset
        self.bounded = bounded

    def __len__(self):
        return len(self.elements)

    def proper(self) -> "CosetPoset":
        if not self.bounded:
            return self
        keep = np.arange(1, len(self) - 1)
        return CosetPoset(self.interval, self.elements[1:-1], self.poset.subposet(keep), False)

    def member_of(self, i):
        return self.elements[i][0]

    def describe(self, i) -> str:
        k, r = self.elements[i]
        if k is None:
            return "empty"
        if k == self.interval.top_index:
            return "G"
        return f"K{k}*g{r}"

    def __repr__(self):
        kind = "bounded" if self.bounded else "proper"
        return f"CosetPoset({kind}, {len(self)} elements)"


def build_coset_poset(I: SubgroupInterval, bounded: bool = True) -> CosetPoset:
    key = ("coset_poset", bounded)
    cached = I._cache.get(key)
    if cached is not None:
        return cached
    G = I.G
    proper = range(len(I) - 1)
    reps = {k: coset_representatives(I.members[k], G) for k in proper}
    elements = [(k, int(r)) for k in proper for r in reps[k]]
    n = len(elements)
    member = np.array([k for k, _ in elements], dtype=np.int64)
    rep = np.array([r for _, r in elements], dtype=np.int64)
    leq = np.zeros((n, n), dtype=bool)
    for l in proper:
        lab = I.members[l].right_coset_labels()
        cols = np.flatnonzero(member == l)
        rows = np.flatnonzero(I.leq[member, l])
        # Kg ⊆ Lg' iff K <= L and g, g' lie in the same right L-coset
        leq[np.ix_(rows, cols)] = lab[rep[rows]][:, None] == lab[rep[cols]][None, :]
    if bounded:
        big = np.zeros((n + 2, n + 2), dtype=bool)
        big[1:-1, 1:-1] = leq
        big[0, :] = True
        big[:, -1] = True
        leq = big
        elements = [(None, None)] + elements + [(I.top_index, 0)]
    P = Poset(leq)
    C = CosetPoset(I, elements, P, bounded)
    I._cache[key] = C
    return C


# -- order complexes -------------------------------------------------------------


@dataclass
class OrderComplex:
    """Chains of a poset.  ``faces[k + 1]`` is an int array of the k-dimensional faces
    (one row per chain, vertices listed bottom to top as poset indices)."""

    poset: Poset
    faces: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.faces) - 2

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(F) for F in self.faces)


def chain_counts(P: Poset) -> tuple[int, ...]:
    """f-vector (from dimension -1) of Δ(P) by counting chains, without listing them."""
    if P.size == 0:
        return (1,)
    ext = P.linear_extension()
    lt = P.lt[np.ix_(ext, ext)].astype(object)
    counts = [1]
    cur = np.ones(P.size, dtype=object)
    while True:
        total = int(cur.sum())
        if total == 0:
            break
        counts.append(total)
        cur = lt.T.dot(cur)
    return tuple(counts)


def reduced_euler_characteristic(f_vector) -> int:
    return sum((f if i % 2 else -f) for i, f in enumerate(f_vector))


def order_complex(P: Poset, max_faces: int | None = None) -> OrderComplex:
    if max_faces is None:
        max_faces = limits().max_faces
    ext = P.linear_extension()
    pos = np.empty(P.size, dtype=np.int64)
    pos[ext] = np.arange(P.size)
    lt = P.lt[np.ix_(ext, ext)]
    faces = [np.zeros((1, 0), dtype=np.int64)]
    cur = np.arange(P.size, dtype=np.int64)[:, None]
    total = 1
    while len(cur):
        total += len(cur)
        if total > max_faces:
            raise FaceLimitExceeded(f"order complex has more than {max_faces} faces")
        faces.append(cur)
        rows, cols = np.nonzero(lt[cur[:, -1]])
        cur = np.concatenate([cur[rows], cols[:, None]], axis=1)
    # chains were built in linear-extension positions (rows are then lexicographic)
    out = OrderComplex(P, [F if F.shape[1] == 0 else ext[F] for F in faces])
    out._positions = faces
    return out


@dataclass(frozen=True)
class Boundary:
    """Sparse integer matrix of ∂_k (rows: (k-1)-faces, columns: k-faces)."""

    rows: np.ndarray
    cols: np.ndarray
    values: np.ndarray
    shape: tuple[int, int]

    def to_dense(self) -> np.ndarray:
        a = np.zeros(self.shape, dtype=np.int64)
        a[self.rows, self.cols] = self.values
        return a

    def column_dicts(self):
        out = [dict() for _ in range(self.shape[1])]
        for r, c, v in zip(self.rows.tolist(), self.cols.tolist(), self.values.tolist()):
            out[c][r] = v
        return out


def _face_keys(F: np.ndarray, n: int):
    k = F.shape[1]
    if k == 0:
        return np.zeros(len(F), dtype=np.int64)
    radix = n ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return F @ radix


def boundary_matrix(K: OrderComplex, k: int) -> Boundary:
    """∂_k of the augmented chain complex; ∂_0 maps every vertex to the empty face."""
    pos = K._positions
    if k < 0 or k + 1 >= len(pos):
        lo = len(pos[k]) if 0 <= k < len(pos) else 0
        return Boundary(np.zeros(0, np.int64), np.zeros(0, np.int64), np.zeros(0, np.int64), (lo, 0))
    upper, lower = pos[k + 1], pos[k]
    m = len(upper)
    n = max(K.poset.size, 2)
    rows, cols, vals = [], [], []
    exact_keys = float(n) ** max(k, 1) < 2.0 ** 62
    if exact_keys:
        lower_keys = _face_keys(lower, n)
    else:
        lookup = {tuple(f): i for i, f in enumerate(lower.tolist())}
    for i in range(k + 1):
        sub = np.delete(upper, i, axis=1)
        if exact_keys:
            idx = np.searchsorted(lower_keys, _face_keys(sub, n))
        else:
            idx = np.array([lookup[tuple(f)] for f in sub.tolist()], dtype=np.int64)
        rows.append(idx)
        cols.append(np.arange(m, dtype=np.int64))
        vals.append(np.full(m, 1 if i % 2 == 0 else -1, dtype=np.int64))
    return Boundary(np.concatenate(rows), np.concatenate(cols), np.concatenate(vals), (len(lower), m))


def boundary_rank(B: Boundary) -> int:
    rows, cols = B.shape
    if rows == 0 or cols == 0:
        return 0
    if rows * cols <= limits().dense_rank_entries:
        return _kernels.int_rank(B.to_dense())
    return _kernels.sparse_rank(B.column_dicts())


@dataclass(frozen=True)
class HomologyReport:
    f_vector: tuple[int, ...]
    reduced_euler_char: int
    # betti[0] is the reduced Betti number in dimension -1
    betti: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.f_vector) - 2

    def betti_at(self, i: int) -> int:
        j = i + 1
        return self.betti[j] if 0 <= j < len(self.betti) else 0

    def as_dict(self):
        return {"f_vector": list(self.f_vector), "betti": list(self.betti), "euler": self.reduced_euler_char}


def homology(K: OrderComplex) -> HomologyReport:
    f = K.f_vector
    top = len(f) - 1
    # rank[d + 1] = rank of ∂_d for d = -1 .. dim + 1 (the ends are zero maps)
    rank = [0] * (top + 2)
    for d in range(top):
        rank[d + 1] = boundary_rank(boundary_matrix(K, d))
    betti = tuple(f[j] - rank[j] - rank[j + 1] for j in range(top + 1))
    chi = reduced_euler_characteristic(f)
    if sum((b if i % 2 else -b) for i, b in enumerate(betti)) != chi or min(betti) < 0:
        raise ConsistencyError(f"Euler-Poincaré fails: f={f}, betti={betti}")
    return HomologyReport(f, chi, betti)


def poset_homology(P: Poset) -> HomologyReport:
    return homology(order_complex(P))


def coset_complex_homology(I: SubgroupInterval) -> HomologyReport:
    h = I._cache.get("coset_homology")
    if h is None:
        h = poset_homology(build_coset_poset(I, bounded=False).poset)
        I._cache["coset_homology"] = h
    return h


def is_connected(P: Poset) -> bool:
    if P.size == 0:
        return False
    adj = P.lt | P.lt.T
    seen = np.zeros(P.size, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        nxt = adj[frontier].any(axis=0) & ~seen
        seen |= nxt
        frontier = nxt
    return bool(seen.all())


def proper_part_connected(C) -> bool:
    """Connectivity of the comparability graph of the proper part of a bounded poset."""
    P = C.poset if isinstance(C, CosetPoset) else C
    inner, _ = P.proper_part()
    return is_connected(inner)


@dataclass(frozen=True)
class CMResult:
    value: bool
    witness: tuple | None = None
    betti: tuple | None = None

    def __bool__(self):
        return self.value


def is_cohen_macaulay(P) -> CMResult:
    """Vanishing of reduced homology below top dimension on every open interval.

    Open intervals of rank difference at most 2 are automatically fine in a graded
    poset (empty, or a nonempty antichain) and are not computed.
    """
    if isinstance(P, CosetPoset):
        P = P.poset
    ranks = P.require_graded()
    ext = P.linear_extension()
    order = {int(x): i for i, x in enumerate(ext)}
    pairs = [(int(x), int(y)) for x, y in zip(*np.nonzero(P.lt)) if ranks[y] - ranks[x] >= 3]
    # bottom element first, then by linear-extension position: deterministic witness
    pairs.sort(key=lambda p: (order[p[0]], order[p[1]]))
    for x, y in pairs:
        inner = P.subposet(P.open_interval(x, y))
        h = poset_homology(inner)
        d = int(ranks[y] - ranks[x]) - 2
        if any(h.betti_at(i) for i in range(-1, d)):
            return CMResult(False, (x, y), h.betti)
    return CMResult(True)


def quillen_reduction_check(I: SubgroupInterval) -> bool:
    """Betti numbers of Δ(C(H,G)) and Δ(C(T,G)) agree, T the meet of the coatoms."""
    top, _ = top_bottom(I)
    if len(top) == len(I):
        return True
    a, b = coset_complex_homology(I).betti, coset_complex_homology(top).betti
    n = max(len(a), len(b))
    return a + (0,) * (n - len(a)) == b + (0,) * (n - len(b))
