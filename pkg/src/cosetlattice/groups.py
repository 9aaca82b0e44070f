"""Small library of concrete permutation groups used by fixtures, tests and the corpus."""

from __future__ import annotations

from itertools import product

from .perm import Permutation, PermGroup, group_from_generators


def cyclic(n: int) -> PermGroup:
    if n == 1:
        return group_from_generators(1, [])
    return group_from_generators(n, [[(i + 1) % n for i in range(n)]])


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n (n >= 3); n = 2 gives the Klein group on 4 points."""
    if n == 2:
        return group_from_generators(4, [[1, 0, 3, 2], [2, 3, 0, 1]])
    rot = [(i + 1) % n for i in range(n)]
    ref = [(-i) % n for i in range(n)]
    return group_from_generators(n, [rot, ref])


def symmetric(n: int) -> PermGroup:
    if n <= 1:
        return group_from_generators(max(n, 1), [])
    gens = [[(i + 1) % n for i in range(n)]]
    if n > 2:
        gens.append([1, 0] + list(range(2, n)))
    return group_from_generators(n, gens)


def alternating(n: int) -> PermGroup:
    if n <= 2:
        return group_from_generators(max(n, 1), [])
    gens = [Permutation.from_cycles(n, [(0, 1, i)]).images for i in range(2, n)]
    return group_from_generators(n, gens)


def elementary_abelian(p: int, k: int) -> PermGroup:
    """(C_p)^k acting regularly on p^k points."""
    pts = list(product(range(p), repeat=k))
    index = {v: i for i, v in enumerate(pts)}
    gens = []
    for j in range(k):
        gens.append([index[tuple((v[t] + (t == j)) % p for t in range(k))] for v in pts])
    return group_from_generators(len(pts), gens)


def regular_representation(elements, mul) -> PermGroup:
    """Right regular representation of an abstract group given by a list and a product."""
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    gens = [[index[mul(x, g)] for x in elements] for g in elements]
    return group_from_generators(n, gens)


def _quat_mul(a, b):
    # quaternion units as (sign, axis) with axis in 1,i,j,k = 0..3
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    s, ax = table[(a[1], b[1])]
    return (a[0] * b[0] * s, ax)


def quaternion() -> PermGroup:
    """Q8, regular on 8 points."""
    els = [(s, a) for s in (1, -1) for a in range(4)]
    return regular_representation(els, _quat_mul)


def dicyclic(n: int) -> PermGroup:
    """Dic_n of order 4n, <a, x | a^2n = 1, x^2 = a^n, x^-1 a x = a^-1>, regular."""
    m = 2 * n
    els = [(e, k) for e in (0, 1) for k in range(m)]

    # elements (e, k) mean x^e a^k
    def mul(u, v):
        e1, k1 = u
        e2, k2 = v
        if e2 == 0:
            return (e1, (k1 + k2) % m)
        # x^e1 a^k1 x a^k2 = x^e1 x a^-k1 a^k2
        if e1 == 0:
            return (1, (k2 - k1) % m)
        return (0, (n + k2 - k1) % m)

    return regular_representation(els, mul)


def direct_product(*groups: PermGroup) -> PermGroup:
    """Intransitive direct product on the disjoint union of the point sets."""
    degree = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            img = list(range(degree))
            for i, j in enumerate(g.images):
                img[offset + i] = offset + j
            gens.append(img)
        offset += G.degree
    return group_from_generators(degree, gens)


def _vectors(n: int, q: int):
    return [v for v in product(range(q), repeat=n) if any(v)]


def _matrix_action(M, pts, q):
    index = {v: i for i, v in enumerate(pts)}
    n = len(pts[0])
    out = []
    for v in pts:
        w = tuple(sum(v[i] * M[i][j] for i in range(n)) % q for j in range(n))
        out.append(index[w])
    return out


def elementary_matrix(n: int, i: int, j: int, a: int = 1):
    M = [[int(r == c) for c in range(n)] for r in range(n)]
    M[i][j] = a
    return M


def matrix_group(n: int, q: int, matrices) -> PermGroup:
    """Matrices over F_q (q prime) acting on nonzero row vectors, v -> vM."""
    pts = _vectors(n, q)
    return group_from_generators(len(pts), [_matrix_action(M, pts, q) for M in matrices])


def matrix_subgroup(G: PermGroup, n: int, q: int, matrices):
    """Subgroup of a :func:`matrix_group` generated by the given matrices."""
    pts = _vectors(n, q)
    return G.closure([G.id_of(_matrix_action(M, pts, q)) for M in matrices])


def general_linear(n: int, q: int) -> PermGroup:
    """GL(n, q) on the q^n - 1 nonzero vectors (equals PSL(n, 2) when q = 2)."""
    gens = [elementary_matrix(n, i, j) for i in range(n) for j in range(n) if i != j]
    if q > 2:
        d = [[int(r == c) for c in range(n)] for r in range(n)]
        d[0][0] = _primitive_root(q)
        gens.append(d)
    return matrix_group(n, q, gens)


def special_linear(n: int, q: int) -> PermGroup:
    gens = [elementary_matrix(n, i, j) for i in range(n) for j in range(n) if i != j]
    return matrix_group(n, q, gens)


def unitriangular(G: PermGroup, n: int, q: int):
    """Upper unitriangular matrices inside a matrix group G."""
    return matrix_subgroup(G, n, q, [elementary_matrix(n, i, i + 1) for i in range(n - 1)])


def permutation_matrices(G: PermGroup, n: int, q: int):
    mats = []
    for k in range(n - 1):
        M = [[0] * n for _ in range(n)]
        perm = list(range(n))
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
        for r in range(n):
            M[r][perm[r]] = 1
        mats.append(M)
    return matrix_subgroup(G, n, q, mats)


def _primitive_root(p: int) -> int:
    for a in range(2, p):
        if len({pow(a, k, p) for k in range(1, p)}) == p - 1:
            return a
    return 1


def affine(p: int, d: int | None = None) -> PermGroup:
    """x -> a x + b over Z_p with a in the subgroup of order d of the units (default p - 1)."""
    d = p - 1 if d is None else d
    if (p - 1) % d:
        raise ValueError("d must divide p - 1")
    a = pow(_primitive_root(p), (p - 1) // d, p)
    return group_from_generators(p, [[(x + 1) % p for x in range(p)], [(a * x) % p for x in range(p)]])

