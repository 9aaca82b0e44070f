"""
Moebius functions of finite posets, the Euler totient φ(H,G) and its dual φ̂(H,G),
and the Moebius invariant of the bounded coset poset.  All results are Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ConsistencyError, NotBoolean
from .lattice import SubgroupInterval, boolean_structure, top_bottom
from .perm import as_group, as_subgroup, coset_generates, coset_representatives
from .poset import Poset


class MoebiusTable:
    """``mu(x, y)`` for all pairs of a finite poset."""

    def __init__(self, poset: Poset, table: np.ndarray):
        self.poset = poset
        self.table = table

    def mu(self, x, y) -> int:
        return int(self.table[x, y])

    @property
    def invariant(self) -> int:
        """μ(0̂, 1̂); requires a bounded poset."""
        lo, hi = self.poset.bounds()
        return self.mu(lo, hi)


def moebius_table(P: Poset) -> MoebiusTable:
    P.bounds()  # NOT_BOUNDED
    ext = P.linear_extension()
    lt = P.lt[np.ix_(ext, ext)]
    mu_ext = _kernels.moebius_inverse(lt)
    table = np.empty_like(mu_ext)
    table[np.ix_(ext, ext)] = mu_ext
    return MoebiusTable(P, table)


def moebius_from_bottom(P: Poset) -> list[int]:
    """μ(0̂, y) for every y, by the recursion over elements below y."""
    lo, _ = P.bounds()
    ext = P.linear_extension()
    lt = P.lt
    mu = [0] * P.size
    for y in ext:
        y = int(y)
        if y == lo:
            mu[y] = 1
        elif P.leq[lo, y]:
            mu[y] = -sum(mu[z] for z in np.flatnonzero(lt[:, y]).tolist())
    return mu


def moebius_invariant(P: Poset) -> int:
    _, hi = P.bounds()
    return moebius_from_bottom(P)[hi]


def _interval_table(I: SubgroupInterval) -> MoebiusTable:
    t = I._cache.get("moebius")
    if t is None:
        t = moebius_table(I.poset)
        I._cache["moebius"] = t
    return t


def euler_totient_direct(H, G) -> int:
    """Number of right cosets Hg with <H, g> = G."""
    G = as_group(G)
    H = as_subgroup(H, G)
    return sum(coset_generates(H, int(g), G) for g in coset_representatives(H, G))


def euler_totient_moebius(I: SubgroupInterval) -> int:
    """Σ_K μ(K, G) |K : H|."""
    t = _interval_table(I)
    top, h = I.top_index, int(I.orders[0])
    return sum(t.mu(k, top) * (int(I.orders[k]) // h) for k in range(len(I)))


def dual_euler_totient(I: SubgroupInterval) -> int:
    """Σ_K μ(H, K) |G : K|."""
    t = _interval_table(I)
    g = int(I.orders[-1])
    return sum(t.mu(0, k) * (g // int(I.orders[k])) for k in range(len(I)))


def coset_poset_moebius(I: SubgroupInterval) -> int:
    """μ of the bounded coset poset via -Σ_K μ(K, G) |G : K|."""
    t = _interval_table(I)
    top, g = I.top_index, int(I.orders[-1])
    return -sum(t.mu(k, top) * (g // int(I.orders[k])) for k in range(len(I)))


def interval_moebius(I: SubgroupInterval) -> int:
    """μ(H, G) in the subgroup lattice."""
    return _interval_table(I).mu(0, I.top_index)


@dataclass(frozen=True)
class CrosscutCheck:
    phi: int
    top_index_factor: int
    phi_top: int
    phi_hat: int
    bottom_index_factor: int
    phi_hat_bottom: int


def crosscut_factorizations(I: SubgroupInterval) -> CrosscutCheck:
    """φ(H,G) = |T:H| φ(T,G) and φ̂(H,G) = |G:B| φ̂(H,B), both evaluated and compared."""
    top, bottom = top_bottom(I)
    h, g = int(I.orders[0]), int(I.orders[-1])
    check = CrosscutCheck(
        phi=euler_totient_moebius(I),
        top_index_factor=top.H.order // h,
        phi_top=euler_totient_moebius(top),
        phi_hat=dual_euler_totient(I),
        bottom_index_factor=g // bottom.G.order,
        phi_hat_bottom=dual_euler_totient(bottom),
    )
    if check.phi != check.top_index_factor * check.phi_top:
        raise ConsistencyError(f"φ crosscut factorization fails: {check}")
    if check.phi_hat != check.bottom_index_factor * check.phi_hat_bottom:
        raise ConsistencyError(f"φ̂ crosscut factorization fails: {check}")
    return check


def _prime_power(n: int):
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        return n
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def prime_power_criterion(I: SubgroupInterval) -> bool:
    """|G:H| = p^m with p not dividing μ(H, G); then φ̂ is nonzero."""
    p = _prime_power(I.index)
    if p is None or interval_moebius(I) % p == 0:
        return False
    if dual_euler_totient(I) == 0:
        raise ConsistencyError("prime-power criterion holds but φ̂ = 0")
    return True


@dataclass(frozen=True)
class TotientReport:
    phi_direct: int
    phi_moebius: int
    phi_hat: int
    coset_poset_mu: int
    rank: int | None

    def as_dict(self):
        return {
            "phi": self.phi_direct,
            "phi_moebius": self.phi_moebius,
            "phi_hat": self.phi_hat,
            "coset_poset_mu": self.coset_poset_mu,
            "rank": self.rank,
        }


def totient_report(I: SubgroupInterval) -> TotientReport:
    """All totient quantities of I, with the identities that tie them checked."""
    try:
        rank = boolean_structure(I).rank
    except NotBoolean:
        rank = None
    rep = TotientReport(
        phi_direct=euler_totient_direct(I.H, I.G),
        phi_moebius=euler_totient_moebius(I),
        phi_hat=dual_euler_totient(I),
        coset_poset_mu=coset_poset_moebius(I),
        rank=rank,
    )
    if rep.phi_direct != rep.phi_moebius:
        raise ConsistencyError(f"φ direct {rep.phi_direct} != Moebius sum {rep.phi_moebius}")
    if rank is not None and rep.coset_poset_mu != -((-1) ** rank) * rep.phi_hat:
        raise ConsistencyError("μ(Ĉ) = -(-1)^n φ̂ fails on a Boolean interval")
    return rep
