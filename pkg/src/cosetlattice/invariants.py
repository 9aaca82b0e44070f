"""Generation predicates, core-freeness, the chain invariant λ(H,G) and the N_G(H)/H test."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import ConsistencyError, NotBoolean, PreconditionFailed
from .lattice import SubgroupInterval, boolean_structure, build_interval, top_bottom
from .perm import (
    _element_id,
    action_on_cosets,
    as_group,
    as_subgroup,
    coset_representatives,
    element_orders,
    join_with,
    normal_core,
    normalizer,
)
from .totient import dual_euler_totient


@dataclass(frozen=True)
class Witnessed:
    value: bool
    witness: int | None = None

    def __bool__(self):
        return self.value


def is_w_cyclic(I: SubgroupInterval) -> Witnessed:
    """Some g with <H, g> = G; the witness is the smallest such coset representative."""
    G = I.G
    for g in coset_representatives(I.H, G):
        if join_with(I.H, int(g)).order == G.order:
            return Witnessed(True, int(g))
    return Witnessed(False)


def conjugate_union(I: SubgroupInterval) -> np.ndarray:
    """Mask of the union of all G-conjugates of all coatoms."""
    P = I.parent
    G = I.G
    union = np.zeros(P.order, dtype=bool)
    for c in I.coatoms:
        M = I.members[c]
        for g in coset_representatives(M, G):
            union[P.conjugate_ids(M.ids, int(g))] = True
    return union


def is_strongly_w_cyclic(I: SubgroupInterval) -> Witnessed:
    """The coatom conjugates do not cover G; the witness is the smallest element outside."""
    outside = np.flatnonzero(I.G.mask & ~conjugate_union(I))
    if len(outside):
        return Witnessed(True, int(outside[0]))
    return Witnessed(False)


def _conjugacy_class(G, x: int) -> np.ndarray:
    P = G.parent
    ids = G.ids
    return np.unique(P.products(P.products(ids, x), P.inverses[ids]))


def fixed_point_free_check(I: SubgroupInterval, x) -> bool:
    """<x> fixes no proper coset Kg; checked directly and against <H, g x g^-1> = G for all g."""
    G = I.G
    P = I.parent
    xid = _element_id(G, x)
    if join_with(I.H, xid).order != G.order:
        raise PreconditionFailed("<H, x> is not G")
    direct = True
    for K in I.members[:-1]:
        lab = K.right_coset_labels()
        reps = coset_representatives(K, G)
        if np.any(lab[P.rmul(xid)[reps]] == lab[reps]):
            direct = False
            break
    conj = all(join_with(I.H, int(y)).order == G.order for y in _conjugacy_class(G, xid))
    if direct != conj:
        raise ConsistencyError("fixed-point-free action and conjugate generation disagree")
    return direct


def is_core_free(H, G) -> bool:
    return normal_core(H, G).order == 1


@dataclass(frozen=True)
class LambdaStep:
    lower: int
    upper: int
    bottom_boolean: bool
    phi_hat: int


@dataclass(frozen=True)
class LambdaResult:
    """``value`` is None when no admissible chain exists."""

    value: int | None
    chain: tuple[int, ...] = ()
    orders: tuple[int, ...] = ()
    steps: tuple[LambdaStep, ...] = field(default=())

    def as_dict(self):
        return {
            "value": self.value,
            "orders": list(self.orders),
            "phi_hat": [s.phi_hat for s in self.steps],
        }


def _bottom_boolean(J: SubgroupInterval) -> bool:
    try:
        boolean_structure(top_bottom(J)[1])
    except NotBoolean:
        return False
    return True


def lambda_(H, G=None) -> LambdaResult:
    """Shortest chain H = H_0 < ... < H_l = G with every step bottom Boolean and φ̂ ≠ 0.

    Breadth-first over comparable pairs of [H, G]; admissibility is computed lazily.
    """
    I = H if isinstance(H, SubgroupInterval) else build_interval(H, G)
    top = I.top_index
    if top == 0:
        return LambdaResult(0, (0,), (I.order(0),))
    cache: dict = {}

    def step(a, b):
        s = cache.get((a, b))
        if s is None:
            J = I.sub(a, b)
            bb = _bottom_boolean(J)
            s = LambdaStep(a, b, bb, dual_euler_totient(J))
            cache[(a, b)] = s
        return s

    def ok(s):
        return s.bottom_boolean and s.phi_hat != 0

    parent = {0: None}
    queue = deque([0])
    found = False
    while queue and not found:
        a = queue.popleft()
        # try the direct jump to G first
        ups = [top] + [b for b in np.flatnonzero(I.poset.lt[a]).tolist() if b != top]
        for b in ups:
            if b in parent or not ok(step(a, b)):
                continue
            parent[b] = a
            if b == top:
                found = True
                break
            queue.append(b)
    if not found:
        return LambdaResult(None)
    chain = [top]
    while parent[chain[-1]] is not None:
        chain.append(parent[chain[-1]])
    chain.reverse()
    steps = tuple(step(a, b) for a, b in zip(chain, chain[1:]))
    return LambdaResult(len(steps), tuple(chain), tuple(I.order(k) for k in chain), steps)


def _is_cyclic_or_generalized_quaternion(Q) -> bool:
    orders = element_orders(Q)
    n = Q.order
    if orders.max() == n:
        return True
    if n >= 8 and n & (n - 1) == 0:
        return int(np.sum(orders == 2)) == 1
    return False


def borel_quotient_test(H, G) -> bool:
    """N_G(H)/H is cyclic or generalized quaternion."""
    G = as_group(G)
    H = as_subgroup(H, G)
    N = normalizer(H, G)
    Q = action_on_cosets(N, H)
    if Q.order != N.order // H.order:
        raise ConsistencyError("quotient action is not faithful on N/H")
    return _is_cyclic_or_generalized_quaternion(Q)
