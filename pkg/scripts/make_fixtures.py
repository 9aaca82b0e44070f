"""Regenerate src/cosetlattice/data/fixtures.cat from explicit constructions.

Each entry is a core-free transitive action G on G/K, written so that point 0 is the
coset K (its stabilizer is K).  Ids below 100 follow the usual transitive-group
numbering for the small degrees where it is unambiguous; ids >= 100 are local.

    python3 scripts/make_fixtures.py
"""

from pathlib import Path

from cosetlattice import groups as gr
from cosetlattice.catalog import entry_from_group, write_catalog
from cosetlattice.lattice import build_interval
from cosetlattice.perm import Permutation, action_on_cosets, is_normal, normal_core

OUT = Path(__file__).resolve().parents[1] / "src" / "cosetlattice" / "data" / "fixtures.cat"


def on_cosets(G, K):
    A = action_on_cosets(G, K)
    assert A.order == G.order, "action must be faithful"
    return A


def gen(G, *cycle_lists):
    """Subgroup of G generated by permutations given as cycle lists."""
    return G.closure([G.id_of(Permutation.from_cycles(G.degree, c)) for c in cycle_lists])


def subgroup_of_order(G, order, normal=None, pick=0):
    """The pick-th core-free subgroup of the given order (member order of [1, G])."""
    found = []
    for K in build_interval(G.trivial(), G).members:
        if K.order != order or normal_core(K, G.full()).order != 1:
            continue
        if normal is not None and is_normal(K, G.full()) != normal:
            continue
        found.append(K)
    return found[pick]


def regular(G):
    return on_cosets(G, G.trivial())


def build():
    E = []

    def add(G, ident, name):
        assert G.is_transitive()
        E.append(entry_from_group(G, ident, name))

    add(gr.symmetric(2), 1, "S2")
    add(gr.cyclic(3), 1, "C3")
    add(gr.symmetric(3), 2, "S3")
    add(gr.cyclic(4), 1, "C4")
    add(gr.dihedral(2), 2, "E4")
    add(gr.dihedral(4), 3, "D8")
    add(gr.alternating(4), 4, "A4")
    add(gr.symmetric(4), 5, "S4")
    add(gr.cyclic(5), 1, "C5")
    add(gr.dihedral(5), 2, "D10")
    add(gr.affine(5), 3, "F20")
    add(gr.alternating(5), 4, "A5")
    add(gr.symmetric(5), 5, "S5")
    add(gr.cyclic(6), 1, "C6")
    add(regular(gr.symmetric(3)), 2, "S3 regular")
    add(gr.dihedral(6), 3, "D12")
    A4 = gr.alternating(4)
    add(on_cosets(A4, subgroup_of_order(A4, 2)), 4, "A4 on 6")
    A5 = gr.alternating(5)
    add(on_cosets(A5, subgroup_of_order(A5, 10)), 12, "A5 on 6")
    S5 = gr.symmetric(5)
    add(on_cosets(S5, subgroup_of_order(S5, 20)), 14, "S5 on 6")
    S4 = gr.symmetric(4)
    add(on_cosets(S4, gen(S4, [(0, 1, 2, 3)])), 100, "S4 on cosets of C4")
    add(on_cosets(S4, gen(S4, [(0, 1)], [(2, 3)])), 101, "S4 on cosets of a non-normal E4")
    add(gr.cyclic(7), 1, "C7")
    add(gr.dihedral(7), 2, "D14")
    add(gr.affine(7, 3), 3, "F21")
    add(gr.affine(7), 4, "F42")
    add(gr.general_linear(3, 2), 5, "PSL(3,2)")
    add(gr.cyclic(8), 1, "C8")
    add(regular(gr.direct_product(gr.cyclic(4), gr.cyclic(2))), 2, "C4xC2 regular")
    add(gr.elementary_abelian(2, 3), 3, "E8 regular")
    add(regular(gr.dihedral(4)), 4, "D8 regular")
    add(gr.quaternion(), 5, "Q8 regular")
    add(on_cosets(S4, subgroup_of_order(S4, 3)), 100, "S4 on 8")
    L27 = gr.general_linear(3, 2)
    add(on_cosets(L27, subgroup_of_order(L27, 21)), 101, "PSL(3,2) on 8")
    add(gr.cyclic(9), 1, "C9")
    add(gr.elementary_abelian(3, 2), 2, "E9 regular")
    add(gr.dihedral(9), 3, "D18")
    add(gr.cyclic(10), 1, "C10")
    add(regular(gr.dihedral(5)), 2, "D10 regular")
    add(gr.dihedral(10), 3, "D20")
    F20 = gr.affine(5)
    add(on_cosets(F20, subgroup_of_order(F20, 2)), 4, "F20 on 10")
    add(on_cosets(A5, subgroup_of_order(A5, 6)), 100, "A5 on 10")
    add(on_cosets(S5, gen(S5, [(0, 1, 2)], [(0, 1)], [(3, 4)])), 101, "S5 on 2-subsets")
    add(gr.cyclic(11), 1, "C11")
    add(gr.dihedral(11), 2, "D22")
    add(gr.affine(11, 5), 3, "F55")
    add(gr.affine(11), 4, "F110")
    add(gr.cyclic(12), 1, "C12")
    add(regular(gr.direct_product(gr.cyclic(6), gr.cyclic(2))), 2, "C6xC2 regular")
    add(regular(gr.dihedral(6)), 3, "D12 regular")
    add(regular(gr.alternating(4)), 4, "A4 regular")
    add(gr.dicyclic(3), 5, "Dic3 regular")
    add(on_cosets(S4, gen(S4, [(0, 1)])), 100, "S4 on cosets of a transposition")
    add(on_cosets(S4, gen(S4, [(0, 1), (2, 3)])), 101, "S4 on cosets of a double transposition")
    add(on_cosets(A5, subgroup_of_order(A5, 5)), 102, "A5 on 12")

    # the two rank-2 Boolean, non group-complemented intervals
    G = gr.general_linear(3, 2)
    add(on_cosets(G, gr.unitriangular(G, 3, 2)), 100, "PSL(3,2) on cosets of D8")
    add(on_cosets(G, gr.permutation_matrices(G, 3, 2)), 100, "PSL(3,2) on cosets of S3")

    # [1 x S2^n, S2 x S3^n] for n = 1, 2
    for n in (1, 2):
        P = gr.direct_product(gr.symmetric(2), *[gr.symmetric(3)] * n)
        t = [P.id_of(_transposition(P.degree, 2 + 3 * j)) for j in range(n)]
        H = P.closure(t)
        add(on_cosets(P, H), 200 + n, f"S2 x S3^{n} on cosets of 1 x S2^{n}")
    return E


def _transposition(degree, a):
    img = list(range(degree))
    img[a], img[a + 1] = img[a + 1], img[a]
    return img


if __name__ == "__main__":
    entries = build()
    write_catalog(entries, OUT, comments=[
        "generated by scripts/make_fixtures.py",
        "point 0 is the coset of the intended stabilizer",
    ])
    print(f"wrote {len(entries)} entries to {OUT}")
