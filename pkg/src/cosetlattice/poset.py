"""Finite posets given by a reflexive order matrix."""

from __future__ import annotations

from itertools import product as _product

import numpy as np

from .errors import NotBounded, NotGraded


class Poset:
    """A finite poset on ``0..n-1``; ``leq[x, y]`` is True iff x <= y.

    ``names`` is an optional list of labels used only for display and witnesses.
    """

    def __init__(self, leq, names=None, check=False):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise ValueError("leq must be square")
        np.fill_diagonal(leq, True)
        leq.setflags(write=False)
        self.leq = leq
        self.size = leq.shape[0]
        self.names = list(names) if names is not None else None
        if check:
            self._check_partial_order()
        self._cache = {}

    def _check_partial_order(self):
        l = self.leq
        if np.any(l & l.T & ~np.eye(self.size, dtype=bool)):
            raise ValueError("relation is not antisymmetric")
        li = l.astype(np.int64)
        if np.any((li @ li > 0) & ~l):
            raise ValueError("relation is not transitive")

    def __len__(self):
        return self.size

    def name(self, x):
        return self.names[x] if self.names is not None else x

    @property
    def lt(self) -> np.ndarray:
        lt = self._cache.get("lt")
        if lt is None:
            lt = self.leq & ~np.eye(self.size, dtype=bool)
            lt.setflags(write=False)
            self._cache["lt"] = lt
        return lt

    @property
    def cover(self) -> np.ndarray:
        """``cover[x, y]`` iff x is covered by y."""
        cov = self._cache.get("cover")
        if cov is None:
            lt = self.lt.astype(np.float32)
            two_step = (lt @ lt) > 0
            cov = self.lt & ~two_step
            cov.setflags(write=False)
            self._cache["cover"] = cov
        return cov

    def covers(self) -> list[tuple[int, int]]:
        xs, ys = np.nonzero(self.cover)
        return list(zip(xs.tolist(), ys.tolist()))

    def upper_covers(self, x) -> list[int]:
        return np.flatnonzero(self.cover[x]).tolist()

    def linear_extension(self) -> np.ndarray:
        ext = self._cache.get("linext")
        if ext is None:
            below = self.leq.sum(axis=0)
            ext = np.argsort(below, kind="stable")
            self._cache["linext"] = ext
        return ext

    # -- bounds ------------------------------------------------------------

    def minimum(self):
        cand = np.flatnonzero(self.leq.all(axis=1))
        return int(cand[0]) if len(cand) else None

    def maximum(self):
        cand = np.flatnonzero(self.leq.all(axis=0))
        return int(cand[0]) if len(cand) else None

    def is_bounded(self) -> bool:
        return self.size > 0 and self.minimum() is not None and self.maximum() is not None

    def bounds(self):
        lo, hi = self.minimum(), self.maximum()
        if self.size == 0 or lo is None or hi is None:
            raise NotBounded("poset has no minimum or no maximum")
        return lo, hi

    def rank_function(self):
        """Ranks from the minimum if the poset is graded, else None."""
        if "rank" in self._cache:
            return self._cache["rank"]
        ranks = None
        if self.is_bounded():
            lo, _ = self.bounds()
            ranks = np.full(self.size, -1, dtype=np.int64)
            ranks[lo] = 0
            cov = self.cover
            ok = True
            for y in self.linear_extension():
                if y == lo:
                    continue
                below = np.flatnonzero(cov[:, y])
                r = ranks[below]
                if len(r) == 0 or r.min() != r.max():
                    ok = False
                    break
                ranks[y] = r[0] + 1
            if not ok:
                ranks = None
        self._cache["rank"] = ranks
        return ranks

    def is_graded(self) -> bool:
        return self.rank_function() is not None

    def require_graded(self):
        ranks = self.rank_function()
        if ranks is None:
            raise NotGraded("poset is not graded (not bounded, or maximal chains differ in length)")
        return ranks

    def length(self) -> int:
        """Length of the longest chain (number of covers)."""
        if self.size == 0:
            return -1
        longest = np.zeros(self.size, dtype=np.int64)
        cov = self.cover
        for y in self.linear_extension():
            below = np.flatnonzero(cov[:, y])
            if len(below):
                longest[y] = longest[below].max() + 1
        return int(longest.max())

    # -- derived posets ----------------------------------------------------

    def subposet(self, indices) -> "Poset":
        idx = np.asarray(indices, dtype=np.int64)
        names = [self.name(i) for i in idx] if self.names is not None else None
        return Poset(self.leq[np.ix_(idx, idx)], names)

    def open_interval(self, x, y) -> np.ndarray:
        return np.flatnonzero(self.lt[x] & self.lt[:, y])

    def closed_interval(self, x, y) -> np.ndarray:
        return np.flatnonzero(self.leq[x] & self.leq[:, y])

    def dual(self) -> "Poset":
        return Poset(self.leq.T, self.names)

    def proper_part(self) -> tuple["Poset", np.ndarray]:
        lo, hi = self.bounds()
        keep = np.array([i for i in range(self.size) if i not in (lo, hi)], dtype=np.int64)
        return self.subposet(keep), keep

    def bounded_extension(self) -> "Poset":
        """Adjoin a new minimum (index 0) and maximum (last index)."""
        n = self.size
        leq = np.zeros((n + 2, n + 2), dtype=bool)
        leq[1:n + 1, 1:n + 1] = self.leq
        leq[0, :] = True
        leq[:, n + 1] = True
        names = None
        if self.names is not None:
            names = ["0^"] + self.names + ["1^"]
        return Poset(leq, names)

    def comparable_pairs(self):
        xs, ys = np.nonzero(self.lt)
        return list(zip(xs.tolist(), ys.tolist()))

    def maximal_chains(self, x=None, y=None):
        """All maximal chains of the closed interval [x, y] as tuples (bottom first)."""
        if x is None or y is None:
            x, y = self.bounds()
        inside = self.leq[:, y]
        cov = self.cover
        out = []

        def walk(z, path):
            if z == y:
                out.append(tuple(path))
                return
            for w in np.flatnonzero(cov[z] & inside):
                path.append(int(w))
                walk(int(w), path)
                path.pop()

        if self.leq[x, y]:
            walk(x, [x])
        return out


def boolean_lattice(n: int) -> Poset:
    """Subsets of ``{1..n}`` ordered by inclusion; element i is the bitmask i."""
    m = 1 << n
    s = np.arange(m)
    leq = (s[:, None] & ~s[None, :]) == 0
    names = ["".join(str(j + 1) for j in range(n) if (i >> j) & 1) or "{}" for i in range(m)]
    return Poset(leq, names)


def chain_poset(k: int) -> Poset:
    """Totally ordered set with k elements."""
    s = np.arange(k)
    return Poset(s[:, None] <= s[None, :])


def antichain(k: int) -> Poset:
    return Poset(np.eye(k, dtype=bool))


def product_poset(P: Poset, Q: Poset) -> Poset:
    """Componentwise order on P x Q; element (p, q) has index p * |Q| + q."""
    leq = np.kron(P.leq.astype(np.int8), Q.leq.astype(np.int8)).astype(bool)
    names = None
    if P.names is not None and Q.names is not None:
        names = [f"({a},{b})" for a, b in _product(P.names, Q.names)]
    return Poset(leq, names)
