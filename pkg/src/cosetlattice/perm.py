"""
Finite permutation groups on the points ``0..n-1`` by full enumeration.

Products act on the right: ``(p * q)(i) == q(p(i))``, so ``Kg`` is the set of
``k * g`` and the right cosets of a point stabilizer correspond to points.

A :class:`PermGroup` stores its elements as a lexicographically sorted image
table; element ids are row numbers, so id 0 is the identity and the smallest id
in a coset is its canonical representative.  A :class:`Subgroup` is a boolean
mask over the ids of its parent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .config import limits
from .errors import EnumerationLimitExceeded, InvalidPermutation, NotAnElement, NotASubgroup


class Permutation:
    """A bijection of ``{0, ..., n-1}`` given by its image array."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"not a bijection of 0..{len(images) - 1}: {list(images)}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            cyc = list(cyc)
            if seen.intersection(cyc) or any(not 0 <= c < degree for c in cyc):
                raise InvalidPermutation(f"bad cycle {cyc} for degree {degree}")
            seen.update(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise InvalidPermutation("degree mismatch")
        o = other.images
        return Permutation._raw(tuple(o[i] for i in self.images))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @classmethod
    def _raw(cls, images: tuple) -> "Permutation":
        p = cls.__new__(cls)
        p.images = images
        return p

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for s in range(self.degree):
            if seen[s]:
                continue
            cyc = []
            x = s
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return f"Permutation(id, degree={self.degree})"
        return "Permutation(" + "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) + f", degree={self.degree})"


def _as_perm(p, degree: int) -> Permutation:
    if not isinstance(p, Permutation):
        p = Permutation(p)
    if p.degree != degree:
        raise InvalidPermutation(f"expected degree {degree}, got {p.degree}")
    return p


def _dtype_for(degree: int):
    return np.uint8 if degree <= 256 else np.uint16 if degree <= 65536 else np.uint32


class PermGroup:
    """A fully enumerated permutation group.

    Elements are rows of ``elements`` (sorted lexicographically).  Right and left
    multiplication maps ``x -> x*g`` and ``x -> g*x`` are computed as id arrays
    on demand and cached.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], elements: np.ndarray):
        self.degree = degree
        self.generators = tuple(generators)
        elements = np.ascontiguousarray(elements)
        elements.setflags(write=False)
        self._elements = elements
        self.order = len(elements)
        self._rmul: dict[int, np.ndarray] = {}
        self._lmul: dict[int, np.ndarray] = {}
        self._inverse = None
        self._full = None
        self._build_index()

    # -- indexing -------------------------------------------------------

    def _build_index(self):
        e = self._elements.astype(np.int64)
        n = self.degree
        codes = np.zeros(self.order, dtype=np.int64)
        base = []
        distinct = 1
        for p in range(n):
            if distinct == self.order:
                break
            trial = codes * n + e[:, p]
            _, inv = np.unique(trial, return_inverse=True)
            count = int(inv.max()) + 1 if self.order else 0
            if count > distinct:
                base.append(p)
                codes = inv.astype(np.int64)
                distinct = count
        self._base = np.array(base, dtype=np.int64)
        if n ** max(len(base), 1) < 2 ** 62:
            self._radix = n ** np.arange(len(base) - 1, -1, -1, dtype=np.int64)
            keys = e[:, self._base] @ self._radix if len(base) else np.zeros(self.order, dtype=np.int64)
            order = np.argsort(keys, kind="stable")
            self._keys = keys[order]
            self._key_pos = order
            self._dict = None
        else:
            self._radix = None
            self._dict = {row.tobytes(): i for i, row in enumerate(self._elements)}

    def ids_of(self, rows: np.ndarray) -> np.ndarray:
        """Ids of image rows that are known to lie in the group."""
        rows = np.asarray(rows)
        if rows.ndim == 1:
            rows = rows[None, :]
        if self._radix is None:
            rows = rows.astype(self._elements.dtype)
            return np.array([self._dict[r.tobytes()] for r in rows], dtype=np.int64)
        if len(self._base) == 0:
            return np.zeros(len(rows), dtype=np.int64)
        keys = rows[:, self._base].astype(np.int64) @ self._radix
        return self._key_pos[np.searchsorted(self._keys, keys)]

    def find(self, perm) -> int | None:
        """Id of ``perm`` or None when it is not an element."""
        p = perm.images if isinstance(perm, Permutation) else tuple(perm)
        if len(p) != self.degree:
            return None
        row = np.array(p, dtype=np.int64)
        if self._radix is None:
            return self._dict.get(row.astype(self._elements.dtype).tobytes())
        if len(self._base):
            key = int(row[self._base] @ self._radix)
            pos = int(np.searchsorted(self._keys, key))
            if pos >= self.order or self._keys[pos] != key:
                return None
            i = int(self._key_pos[pos])
        else:
            i = 0
        return i if np.array_equal(self._elements[i], row) else None

    def id_of(self, perm) -> int:
        i = self.find(perm)
        if i is None:
            raise NotAnElement(f"{perm!r} is not an element of the group")
        return i

    # -- elements and maps ---------------------------------------------

    @property
    def elements(self) -> np.ndarray:
        return self._elements

    def element(self, i: int) -> Permutation:
        return Permutation._raw(tuple(int(v) for v in self._elements[i]))

    def __len__(self):
        return self.order

    def __iter__(self):
        return (self.element(i) for i in range(self.order))

    def __contains__(self, perm):
        return self.find(perm) is not None

    def rmul(self, g: int) -> np.ndarray:
        """``out[x] = id(x * g)``."""
        col = self._rmul.get(g)
        if col is None:
            # (x*g)[i] = g[x[i]]
            col = self.ids_of(self._elements[g][self._elements])
            col.setflags(write=False)
            self._rmul[g] = col
        return col

    def lmul(self, g: int) -> np.ndarray:
        """``out[x] = id(g * x)``."""
        col = self._lmul.get(g)
        if col is None:
            # (g*x)[i] = x[g[i]]
            col = self.ids_of(self._elements[:, self._elements[g]])
            col.setflags(write=False)
            self._lmul[g] = col
        return col

    @property
    def inverses(self) -> np.ndarray:
        if self._inverse is None:
            inv = np.empty_like(self._elements)
            rows = np.arange(self.order)[:, None]
            inv[rows, self._elements] = np.arange(self.degree, dtype=self._elements.dtype)[None, :]
            self._inverse = self.ids_of(inv)
            self._inverse.setflags(write=False)
        return self._inverse

    def products(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """Ids of ``left[i] * right[i]`` (broadcasting id arrays)."""
        left, right = np.broadcast_arrays(np.asarray(left), np.asarray(right))
        e = self._elements
        return self.ids_of(np.take_along_axis(e[right.ravel()], e[left.ravel()].astype(np.int64), axis=1)).reshape(left.shape)

    def conjugate_ids(self, ids: np.ndarray, g: int) -> np.ndarray:
        """Ids of ``g^-1 * x * g`` for x in ids."""
        ginv = int(self.inverses[g])
        return self.products(self.products(ginv, ids), g)

    # -- subgroups -----------------------------------------------------

    def full(self) -> "Subgroup":
        if self._full is None:
            gens = tuple(self.id_of(g) for g in self.generators)
            mask = np.ones(self.order, dtype=bool)
            self._full = Subgroup(self, mask, tuple(g for g in gens if g != 0))
        return self._full

    def trivial(self) -> "Subgroup":
        mask = np.zeros(self.order, dtype=bool)
        mask[0] = True
        return Subgroup(self, mask, ())

    def closure(self, gen_ids: Iterable[int]) -> "Subgroup":
        gens = tuple(sorted({int(g) for g in gen_ids} - {0}))
        if not gens:
            return self.trivial()
        maps = np.stack([self.rmul(g) for g in gens])
        return Subgroup(self, _kernels.reach(maps, 0), gens)

    def subgroup_from_mask(self, mask: np.ndarray) -> "Subgroup":
        """Wrap a mask known to be a subgroup, choosing a small generating set."""
        mask = np.asarray(mask, dtype=bool)
        gens: list[int] = []
        current = self.trivial().mask
        for x in np.flatnonzero(mask):
            if not current[x]:
                gens.append(int(x))
                current = self.closure(gens).mask
        if not np.array_equal(current, mask):
            raise NotASubgroup("mask is not closed under multiplication")
        return Subgroup(self, mask.copy(), tuple(gens))

    def orbit(self, point: int) -> set[int]:
        orbit = {point}
        frontier = [point]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = g.images[x]
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        return orbit

    def is_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbit(0)) == self.degree

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"


class Subgroup:
    """A subgroup of an enumerated :class:`PermGroup`, stored as a bitset over element ids."""

    def __init__(self, parent: PermGroup, mask: np.ndarray, gens: tuple[int, ...]):
        mask.setflags(write=False)
        self.parent = parent
        self.mask = mask
        self.gens = gens
        self.order = int(mask.sum())
        self.key = np.packbits(mask).tobytes()
        self._cache: dict = {}

    @property
    def ids(self) -> np.ndarray:
        ids = self._cache.get("ids")
        if ids is None:
            ids = np.flatnonzero(self.mask)
            self._cache["ids"] = ids
        return ids

    @property
    def degree(self) -> int:
        return self.parent.degree

    @property
    def generators(self) -> list[Permutation]:
        return [self.parent.element(g) for g in self.gens]

    def permutations(self) -> list[Permutation]:
        return [self.parent.element(i) for i in self.ids]

    def __len__(self):
        return self.order

    def __contains__(self, item):
        if isinstance(item, (int, np.integer)):
            return bool(self.mask[item])
        i = self.parent.find(item)
        return i is not None and bool(self.mask[i])

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __le__(self, other: "Subgroup"):
        return other.parent is self.parent and not np.any(self.mask & ~other.mask)

    def __lt__(self, other: "Subgroup"):
        return self.order < other.order and self <= other

    def index_in(self, other: "Subgroup") -> int:
        return other.order // self.order

    def right_coset_labels(self) -> np.ndarray:
        """``labels[x]`` numbers the coset ``Kx``; numbering follows smallest element."""
        lab = self._cache.get("rlab")
        if lab is None:
            maps = np.stack([self.parent.lmul(g) for g in self.gens]) if self.gens else np.zeros((0, self.parent.order), dtype=np.int64)
            lab, _ = _kernels.component_labels(maps, self.parent.order)
            lab.setflags(write=False)
            self._cache["rlab"] = lab
        return lab

    def left_coset_labels(self) -> np.ndarray:
        """``labels[x]`` numbers the coset ``xK``."""
        lab = self._cache.get("llab")
        if lab is None:
            maps = np.stack([self.parent.rmul(g) for g in self.gens]) if self.gens else np.zeros((0, self.parent.order), dtype=np.int64)
            lab, _ = _kernels.component_labels(maps, self.parent.order)
            lab.setflags(write=False)
            self._cache["llab"] = lab
        return lab

    def __repr__(self):
        return f"Subgroup(order={self.order}, of {self.parent!r})"


@dataclass(frozen=True)
class Coset:
    """The right coset ``subgroup * representative`` with its canonical (smallest) representative."""

    subgroup: Subgroup
    rep_id: int

    @property
    def representative(self) -> Permutation:
        return self.subgroup.parent.element(self.rep_id)

    @property
    def ids(self) -> np.ndarray:
        lab = self.subgroup.right_coset_labels()
        return np.flatnonzero(lab == lab[self.rep_id])

    def __len__(self):
        return self.subgroup.order


# ------------------------------------------------------------------------
# operations


def group_from_generators(degree: int, gens: Iterable, limit: int | None = None) -> PermGroup:
    """Enumerate the group generated by ``gens`` by breadth-first closure."""
    if limit is None:
        limit = limits().max_group_order
    if limit < 1:
        raise ValueError("limit must be at least 1")
    perms = [_as_perm(g, degree) for g in gens]
    dt = _dtype_for(degree)
    ident = np.arange(degree, dtype=dt)
    garr = np.array([p.images for p in perms if not p.is_identity()], dtype=dt).reshape(-1, degree)
    row_bytes = degree * np.dtype(dt).itemsize
    vdt = np.dtype((np.void, max(row_bytes, 1)))
    seen = {ident.tobytes()}
    chunks = [ident[None, :]]
    frontier = ident[None, :]
    total = 1
    while frontier.size and len(garr):
        # x*g for each frontier row x and generator g: g[x]
        cand = np.concatenate([g[frontier] for g in garr])
        cand = np.unique(cand, axis=0)
        keys = np.ascontiguousarray(cand).view(vdt).ravel().tolist()
        new = [i for i, k in enumerate(keys) if k not in seen]
        if not new:
            break
        seen.update(keys[i] for i in new)
        total += len(new)
        if total > limit:
            raise EnumerationLimitExceeded(f"group order exceeds {limit}")
        frontier = cand[new]
        chunks.append(frontier)
    if degree == 0:
        return PermGroup(0, perms, np.zeros((1, 0), dtype=dt))
    table = np.concatenate(chunks)
    order = np.lexsort(table.T[::-1])
    return PermGroup(degree, perms, table[order])


def as_subgroup(H, G) -> Subgroup:
    """Interpret ``H`` as a subgroup of the parent of ``G``; raise NotASubgroup if ``H`` is not inside ``G``."""
    G = as_group(G)
    if isinstance(H, PermGroup):
        if H is G.parent:
            H = H.full()
        else:
            if H.degree != G.degree:
                raise NotASubgroup("degree mismatch")
            ids = [G.parent.find(g) for g in H.generators]
            if any(i is None for i in ids):
                raise NotASubgroup("a generator lies outside the parent group")
            H = G.parent.closure(ids)
    if not isinstance(H, Subgroup) or H.parent is not G.parent or not H <= G:
        raise NotASubgroup("H is not a subgroup of G")
    return H


def as_group(G) -> Subgroup:
    if isinstance(G, PermGroup):
        return G.full()
    if isinstance(G, Subgroup):
        return G
    raise TypeError(f"expected PermGroup or Subgroup, got {type(G).__name__}")


def _element_id(G: Subgroup, g) -> int:
    if isinstance(g, (int, np.integer)):
        i = int(g)
    else:
        i = G.parent.find(g)
    if i is None or not G.mask[i]:
        raise NotAnElement(f"{g!r} is not an element of the group")
    return i


def subgroup_generated(G, seeds: Iterable) -> Subgroup:
    """``<seeds>`` as a subgroup of ``G``."""
    G = as_group(G)
    ids = [_element_id(G, s) for s in seeds]
    return G.parent.closure(ids)


def coset_representatives(H, G) -> np.ndarray:
    """Canonical representatives (ascending) of the right cosets of H inside G."""
    G = as_group(G)
    H = as_subgroup(H, G)
    lab = H.right_coset_labels()[G.ids]
    _, first = np.unique(lab, return_index=True)
    return G.ids[np.sort(first)]


def right_cosets(H, G) -> list[Coset]:
    H = as_subgroup(H, G)
    return [Coset(H, int(r)) for r in coset_representatives(H, G)]


def join_with(H: Subgroup, g: int) -> Subgroup:
    """``<H, g>`` for an element id g of the same parent."""
    if H.mask[g]:
        return H
    return H.parent.closure(H.gens + (int(g),))


def coset_generates(H, g, G) -> bool:
    """True iff ``<H, g> = G``."""
    G = as_group(G)
    H = as_subgroup(H, G)
    gid = _element_id(G, g)
    return join_with(H, gid).order == G.order


def normal_core(H, G) -> Subgroup:
    """Largest normal subgroup of G contained in H."""
    G = as_group(G)
    H = as_subgroup(H, G)
    P = G.parent
    core = H.mask.copy()
    hid = H.ids
    for g in coset_representatives(H, G):
        if g == 0:
            continue
        conj = P.conjugate_ids(hid, int(g))
        m = np.zeros(P.order, dtype=bool)
        m[conj] = True
        core &= m
        if core.sum() == 1:
            break
    return P.subgroup_from_mask(core)


def normalizer(H, G) -> Subgroup:
    """``N_G(H) = {g in G : g^-1 H g = H}``."""
    G = as_group(G)
    H = as_subgroup(H, G)
    P = G.parent
    gens = np.array(H.gens, dtype=np.int64)
    good = []
    for g in coset_representatives(H, G):
        if len(gens) == 0 or H.mask[P.conjugate_ids(gens, int(g))].all():
            good.append(g)
    lab = H.right_coset_labels()
    keep = np.zeros(int(lab.max()) + 1, dtype=bool)
    keep[lab[np.array(good, dtype=np.int64)]] = True
    return P.subgroup_from_mask(keep[lab] & G.mask)


def stabilizer(G, point: int) -> Subgroup:
    G = as_group(G)
    if not 0 <= point < G.degree:
        raise IndexError(f"point {point} out of range for degree {G.degree}")
    P = G.parent
    mask = G.mask & (P.elements[:, point] == point)
    return P.subgroup_from_mask(mask)


def action_on_cosets(G, H) -> PermGroup:
    """The permutation group induced by right multiplication of G on the right cosets of H."""
    G = as_group(G)
    H = as_subgroup(H, G)
    P = G.parent
    reps = coset_representatives(H, G)
    lab = H.right_coset_labels()
    position = {int(lab[r]): i for i, r in enumerate(reps)}
    to_pos = np.full(int(lab.max()) + 1, -1, dtype=np.int64)
    for k, v in position.items():
        to_pos[k] = v
    images = []
    gens = G.gens if G.gens else ()
    for s in gens:
        moved = P.rmul(s)[reps]
        images.append(to_pos[lab[moved]].tolist())
    return group_from_generators(len(reps), images)


def is_normal(N, G) -> bool:
    G = as_group(G)
    N = as_subgroup(N, G)
    P = G.parent
    gens = np.array(N.gens, dtype=np.int64)
    if len(gens) == 0:
        return True
    return all(N.mask[P.conjugate_ids(gens, int(g))].all() for g in G.gens)


def element_orders(G) -> np.ndarray:
    """Order of every element of G (indexed like ``G.ids``)."""
    G = as_group(G)
    P = G.parent
    e = P.elements[G.ids].astype(np.int64)
    out = np.ones(len(e), dtype=np.int64)
    power = e.copy()
    ident = np.arange(P.degree, dtype=np.int64)
    done = np.all(power == ident, axis=1)
    k = 1
    while not done.all():
        k += 1
        power = np.take_along_axis(e, power, axis=1)
        hit = ~done & np.all(power == ident, axis=1)
        out[hit] = k
        done |= hit
    return out
