"""
The interval [H, G] of the subgroup lattice as an explicit finite lattice, and the
structural predicates on it: distributive, Boolean, group-complemented, Dedekind.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotBoolean
from .perm import Subgroup, as_group, as_subgroup, coset_representatives, join_with
from .poset import Poset


class SubgroupInterval:
    """All subgroups K with H <= K <= G, sorted by order then canonically.

    ``members[0]`` is H and ``members[-1]`` is G.  Members are subgroups of one
    enumerated parent group, identified by their element bitsets.
    """

    def __init__(self, members: list[Subgroup]):
        self.members = members
        self._index = {K.key: i for i, K in enumerate(members)}
        packed = np.stack([np.packbits(K.mask) for K in members])
        m = len(members)
        leq = np.zeros((m, m), dtype=bool)
        for i in range(m):
            leq[i] = ~np.any(packed[i] & ~packed, axis=1)
        self.leq = leq
        self.leq.setflags(write=False)
        self.orders = np.array([K.order for K in members], dtype=np.int64)
        self.poset = Poset(leq)
        cov = self.poset.cover
        self.bottom_index = 0
        self.top_index = m - 1
        self.atoms = np.flatnonzero(cov[0]).tolist()
        self.coatoms = np.flatnonzero(cov[:, m - 1]).tolist()
        self._cache: dict = {}

    # -- basics ----------------------------------------------------------------

    def __len__(self):
        return len(self.members)

    @property
    def H(self) -> Subgroup:
        return self.members[0]

    @property
    def G(self) -> Subgroup:
        return self.members[-1]

    @property
    def parent(self):
        return self.H.parent

    @property
    def index(self) -> int:
        return self.G.order // self.H.order

    def position(self, K) -> int:
        if isinstance(K, (int, np.integer)):
            return int(K)
        i = self._index.get(K.key)
        if i is None:
            raise KeyError("subgroup is not a member of the interval")
        return i

    def find(self, K: Subgroup):
        return self._index.get(K.key)

    def order(self, i) -> int:
        return int(self.orders[self.position(i)])

    # -- lattice operations ----------------------------------------------------

    def meet(self, a, b) -> int:
        a, b = self.position(a), self.position(b)
        mask = self.members[a].mask & self.members[b].mask
        return self._index[np.packbits(mask).tobytes()]

    def join(self, a, b) -> int:
        a, b = self.position(a), self.position(b)
        upper = np.flatnonzero(self.leq[a] & self.leq[b])
        return int(upper[np.argmin(self.orders[upper])])

    @property
    def meet_table(self) -> np.ndarray:
        t = self._cache.get("meet")
        if t is None:
            m = len(self)
            t = np.empty((m, m), dtype=np.int64)
            for a in range(m):
                for b in range(a, m):
                    lower = np.flatnonzero(self.leq[:, a] & self.leq[:, b])
                    t[a, b] = t[b, a] = lower[np.argmax(self.orders[lower])]
            self._cache["meet"] = t
        return t

    @property
    def join_table(self) -> np.ndarray:
        t = self._cache.get("join")
        if t is None:
            m = len(self)
            t = np.empty((m, m), dtype=np.int64)
            for a in range(m):
                for b in range(a, m):
                    t[a, b] = t[b, a] = self.join(a, b)
            self._cache["join"] = t
        return t

    def sub(self, a, b) -> "SubgroupInterval":
        """The sub-interval [a, b]."""
        a, b = self.position(a), self.position(b)
        idx = np.flatnonzero(self.leq[a] & self.leq[:, b])
        return SubgroupInterval([self.members[i] for i in idx])

    def __repr__(self):
        return f"SubgroupInterval(|H|={self.H.order}, |G|={self.G.order}, members={len(self)})"


def _sort_key(K: Subgroup):
    return (K.order, K.ids.astype(">u8").tobytes())


def build_interval(H, G) -> SubgroupInterval:
    """Enumerate [H, G] as the join-closure of the subgroups <H, g>, g over coset representatives."""
    G = as_group(G)
    H = as_subgroup(H, G)
    found = {H.key: H, G.key: G}
    cyclic = {}
    for g in coset_representatives(H, G):
        K = join_with(H, int(g))
        if K.key not in cyclic:
            cyclic[K.key] = found.setdefault(K.key, K)
    cyclic_list = list(cyclic.values())
    queue = list(found.values())
    while queue:
        X = queue.pop()
        for C in cyclic_list:
            if C <= X or X <= C:
                continue
            J = X.parent.closure(X.gens + C.gens)
            if J.key not in found:
                found[J.key] = J
                queue.append(J)
    members = sorted(found.values(), key=_sort_key)
    return SubgroupInterval(members)


def meet(I: SubgroupInterval, a, b) -> int:
    return I.meet(a, b)


def join(I: SubgroupInterval, a, b) -> int:
    return I.join(a, b)


def is_distributive(I: SubgroupInterval) -> bool:
    """Direct check of x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) over all triples."""
    M, J = I.meet_table, I.join_table
    for x in range(len(I)):
        lhs = M[x][J]
        rhs = J[M[x][:, None], M[x][None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


@dataclass(frozen=True)
class BooleanStructure:
    rank: int
    atoms: tuple[int, ...]
    # atom_mask[k] has bit j set iff atoms[j] <= member k
    atom_mask: tuple[int, ...]
    complement: tuple[int, ...]

    def member_with_mask(self, mask: int) -> int:
        return self.atom_mask.index(mask)

    def coatom_for_atom(self, j: int) -> int:
        """The coatom M_j, complement of the j-th atom (0-based j)."""
        return self.complement[self.atoms[j]]


def boolean_structure(I: SubgroupInterval) -> BooleanStructure:
    """Boolean metadata of I, or raise NotBoolean with the failing condition."""
    s = I._cache.get("boolean")
    if s is not None:
        if isinstance(s, NotBoolean):
            raise s
        return s
    try:
        s = _boolean_structure(I)
    except NotBoolean as err:
        I._cache["boolean"] = err
        raise
    I._cache["boolean"] = s
    return s


def _boolean_structure(I: SubgroupInterval) -> BooleanStructure:
    atoms = I.atoms
    n = len(atoms)
    m = len(I)
    if m != 1 << n:
        raise NotBoolean(f"{m} members but {n} atoms")
    masks = []
    for k in range(m):
        masks.append(sum(1 << j for j, a in enumerate(atoms) if I.leq[a, k]))
    if len(set(masks)) != m:
        raise NotBoolean("two members lie above the same set of atoms")
    arr = np.array(masks)
    subset = (arr[:, None] & ~arr[None, :]) == 0
    if not np.array_equal(subset, I.leq):
        raise NotBoolean("order is not inclusion of atom sets")
    full = (1 << n) - 1
    lookup = {mk: k for k, mk in enumerate(masks)}
    comp = tuple(lookup[full ^ mk] for mk in masks)
    return BooleanStructure(n, tuple(atoms), tuple(masks), comp)


def is_boolean(I: SubgroupInterval) -> bool:
    try:
        boolean_structure(I)
    except NotBoolean:
        return False
    return True


def top_bottom(I: SubgroupInterval) -> tuple[SubgroupInterval, SubgroupInterval]:
    """(top interval [T, G], bottom interval [H, B])."""
    T = I.top_index
    for c in I.coatoms:
        T = I.meet(T, c)
    B = I.bottom_index
    for a in I.atoms:
        B = I.join(B, a)
    return I.sub(T, I.top_index), I.sub(I.bottom_index, B)


def is_top_boolean(I: SubgroupInterval) -> bool:
    return is_boolean(top_bottom(I)[0])


def is_bottom_boolean(I: SubgroupInterval) -> bool:
    return is_boolean(top_bottom(I)[1])


def is_group_complemented(I: SubgroupInterval) -> bool:
    """|G:K| = |K^c : H| for every member K (requires a Boolean interval)."""
    s = boolean_structure(I)
    o = I.orders
    G, H = o[-1], o[0]
    return all(G // o[k] == o[s.complement[k]] // H for k in range(len(I)))


def is_dedekind(I: SubgroupInterval) -> bool:
    """HgK = KgH for every member K and every g in G."""
    P = I.parent
    H = I.H
    hid = H.ids
    reps = coset_representatives(H, I.G)
    for K in I.members[1:-1]:
        left = K.left_coset_labels()
        right = K.right_coset_labels()
        nl, nr = int(left.max()) + 1, int(right.max()) + 1
        for g in reps:
            g = int(g)
            # HgK is a union of left K-cosets, KgH a union of right K-cosets
            hg = P.products(hid, g)
            gh = P.products(g, hid)
            ml = np.zeros(nl, dtype=bool)
            ml[left[hg]] = True
            mr = np.zeros(nr, dtype=bool)
            mr[right[gh]] = True
            if not np.array_equal(ml[left], mr[right]):
                return False
    return True
