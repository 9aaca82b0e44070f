"""
Edge labelings of graded posets, the labeling ``el`` of the bounded coset poset of a
Boolean interval, (dual) EL verification and decreasing-chain counts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import CosetPoset, build_coset_poset, coset_complex_homology
from .errors import ConsistencyError, NotGroupComplemented
from .lattice import SubgroupInterval, boolean_structure, is_group_complemented
from .poset import Poset, boolean_lattice
from .totient import dual_euler_totient, euler_totient_direct, moebius_invariant


class EdgeLabeling:
    """Integer labels on the cover relations of ``poset``; ``labels[(x, y)]`` for x ⋖ y."""

    def __init__(self, poset: Poset, labels: dict, atom_order=None):
        self.poset = poset
        self.labels = labels
        self.atom_order = atom_order
        missing = set(poset.covers()) - set(labels)
        if missing:
            raise ValueError(f"{len(missing)} cover relations are unlabeled")

    def __getitem__(self, edge):
        return self.labels[edge]

    def dual(self) -> "EdgeLabeling":
        """Same labels on the reversed covers of the dual poset."""
        return EdgeLabeling(self.poset.dual(), {(y, x): v for (x, y), v in self.labels.items()}, self.atom_order)

    def edge_list(self):
        return sorted((x, y, v) for (x, y), v in self.labels.items())


def el_labeling(I: SubgroupInterval, C: CosetPoset | None = None) -> EdgeLabeling:
    """``el`` on the bounded coset poset.

    Atoms are numbered 1..n in the interval's member order.  A cover ∅ ⋖ Hg gets 0;
    a cover Xg ⋖ Yg with Y = X ∨ K_i gets -i if g lies in M_i = K_i^c and +i otherwise.
    """
    s = boolean_structure(I)
    if C is None:
        C = build_coset_poset(I, bounded=True)
    coatom_masks = [I.members[s.coatom_for_atom(j)].mask for j in range(s.rank)]
    labels = {}
    for x, y in C.poset.covers():
        kx, gx = C.elements[x]
        if kx is None:
            labels[(x, y)] = 0
            continue
        ky = C.elements[y][0]
        new = s.atom_mask[ky] ^ s.atom_mask[kx]
        j = new.bit_length() - 1
        if new != 1 << j:
            raise ConsistencyError("cover in the coset poset adds more than one atom")
        labels[(x, y)] = -(j + 1) if coatom_masks[j][gx] else j + 1
    return EdgeLabeling(C.poset, labels, tuple(s.atoms))


def example_boolean_labeling(n: int) -> tuple[Poset, EdgeLabeling]:
    """B_n with each cover S ⋖ S ∪ {i} labeled i (1-based)."""
    P = boolean_lattice(n)
    labels = {(x, y): (x ^ y).bit_length() for x, y in P.covers()}
    return P, EdgeLabeling(P, labels)


@dataclass(frozen=True)
class ELResult:
    value: bool
    witness: tuple | None = None
    reason: str | None = None

    def __bool__(self):
        return self.value


def _strictly_increasing(seq) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


def verify_el_labeling(P: Poset, L: EdgeLabeling) -> ELResult:
    """Every closed interval has exactly one strictly increasing maximal chain, and it is
    lexicographically first.  The witness is the failing interval (x, y) that comes first
    in linear-extension order."""
    P.require_graded()
    ext = P.linear_extension()
    pos = np.empty(P.size, dtype=np.int64)
    pos[ext] = np.arange(P.size)
    cov = P.cover
    up = [np.flatnonzero(cov[x]).tolist() for x in range(P.size)]
    lab = L.labels
    best = None
    for y in ext.tolist():
        below = [x for x in ext[::-1].tolist() if P.lt[x, y]]
        lex = {y: ()}
        inc = {y: None}
        for x in below:
            first = {}
            cand = None
            for z in up[x]:
                if z not in lex:
                    continue
                a = lab[(x, z)]
                seq = (a,) + lex[z]
                if cand is None or seq < cand:
                    cand = seq
                if z == y:
                    first[a] = first.get(a, 0) + 1
                else:
                    nz = sum(c for f, c in inc[z].items() if f > a)
                    if nz:
                        first[a] = first.get(a, 0) + nz
            lex[x], inc[x] = cand, first
            total = sum(first.values())
            if total != 1 or not _strictly_increasing(cand):
                key = (int(pos[x]), int(pos[y]))
                if best is None or key < best[0]:
                    reason = f"{total} strictly increasing maximal chains"
                    if total == 1:
                        reason = "the increasing chain is not lexicographically first"
                    best = (key, (x, y), reason)
    if best is None:
        return ELResult(True)
    return ELResult(False, best[1], best[2])


def count_decreasing_maximal_chains(P: Poset, L: EdgeLabeling) -> int:
    """Maximal chains of P whose labels, read from the minimum up, weakly decrease."""
    P.require_graded()
    lo, hi = P.bounds()
    cov = P.cover
    counts = {lo: None}
    for z in P.linear_extension().tolist():
        if z not in counts:
            continue
        for w in np.flatnonzero(cov[z]).tolist():
            a = L.labels[(z, w)]
            if counts[z] is None:
                add = 1
            else:
                add = sum(c for last, c in counts[z].items() if a <= last)
            if add:
                d = counts.setdefault(w, {})
                d[a] = d.get(a, 0) + add
            else:
                counts.setdefault(w, {})
    return sum(counts.get(hi, {}).values()) if hi != lo else 1


@dataclass(frozen=True)
class SphereCounts:
    decreasing_chains: int
    signed_moebius: int
    top_betti: int
    signed_euler: int
    phi: int
    phi_hat: int
    dim: int

    def agree(self) -> bool:
        v = self.decreasing_chains
        return all(x == v for x in (self.signed_moebius, self.top_betti, self.signed_euler, self.phi, self.phi_hat))


def shellability_crosscheck(I: SubgroupInterval) -> SphereCounts:
    """The four sphere counts of a dual EL-shellable Ĉ(H,G), together with φ and φ̂."""
    s = boolean_structure(I)
    if not is_group_complemented(I):
        raise NotGroupComplemented("interval is Boolean but not group-complemented")
    C = build_coset_poset(I, bounded=True)
    L = el_labeling(I, C)
    d = s.rank - 1
    sign = -1 if d % 2 else 1
    h = coset_complex_homology(I)
    out = SphereCounts(
        decreasing_chains=count_decreasing_maximal_chains(C.poset.dual(), L.dual()),
        signed_moebius=sign * moebius_invariant(C.poset),
        top_betti=h.betti_at(d),
        signed_euler=sign * h.reduced_euler_char,
        phi=euler_totient_direct(I.H, I.G),
        phi_hat=dual_euler_totient(I),
        dim=d,
    )
    if not out.agree():
        raise ConsistencyError(f"sphere counts disagree: {out}")
    return out
