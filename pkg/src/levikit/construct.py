"""Random Lie algebras ``B0 + R0`` inside gl(W) with known Levi data.

W is a sum of blocks, each one a natural (2-dim) or adjoint (3-dim) module of
one sl2 copy, or a trivial line. B0 acts block-diagonally. R0 is spanned by
chosen block scalars and full ``Hom(U_j, U_i)`` spaces (i < j) closed under
composition, so R0 is a solvable ideal and ``L / R0 = B0``.

Gradings are elementary: each basis vector of W gets a group element and
``deg E_pq = g_p g_q^{-1}``. Every sl2 copy has a degree s with
``deg e = s``, ``deg h = 1``, ``deg f = s^{-1}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .action import Grading
from .exactmat import ONE, ZERO, Matrix, Subspace
from .groups import FiniteGroup, cyclic_group, free_abelian, symmetric_group3
from .liealg import LieAlgebra, change_basis, from_matrices

NAT = "nat"
ADJ = "adj"
TRIV = "triv"
_SIZE = {NAT: 2, ADJ: 3, TRIV: 1}

# representation matrices of e, h, f
_REP = {
    NAT: ([[0, 1], [0, 0]], [[1, 0], [0, -1]], [[0, 0], [1, 0]]),
    # basis (v+, v0, v-): e v0 = v+, e v- = v0 (scaled to satisfy the relations)
    ADJ: ([[0, -2, 0], [0, 0, 1], [0, 0, 0]],
          [[2, 0, 0], [0, 0, 0], [0, 0, -2]],
          [[0, 0, 0], [-1, 0, 0], [0, 2, 0]]),
}


@dataclass(frozen=True)
class Instance:
    algebra: LieAlgebra
    grading: Grading | None
    b0_dim: int
    r0: Subspace
    basis_change: Matrix
    blocks: tuple


def _group(kind: str):
    if kind == "Z2":
        return cyclic_group(2)
    if kind == "S3":
        return symmetric_group3()
    if kind == "Z":
        return free_abelian(1)
    raise ValueError(f"unknown group kind {kind!r}")


def _random_element(G, rng: random.Random):
    if isinstance(G, FiniteGroup):
        return rng.randrange(G.order)
    return tuple(rng.randint(-2, 2) for _ in range(G.rank))


def _cyclic_subgroups(G: FiniteGroup) -> list[list[int]]:
    out = []
    for g in G.elements():
        sub, x = [G.identity], g
        while x != G.identity:
            sub.append(x)
            x = G.mul(x, g)
        if sorted(sub) not in out:
            out.append(sorted(sub))
    return out


def _component_pickers(G, blocks, pairs, rng: random.Random) -> dict:
    """Element samplers per block and per sl2 copy.

    For a non-abelian group, blocks that can bracket nontrivially (linked by a
    Hom pair or acted on by the same copy) draw degrees from one cyclic
    subgroup, so homogeneous brackets never see non-commuting degrees.
    """
    nb = len(blocks)
    keys = [("block", b) for b in range(nb)] + sorted({("copy", c) for _, c in blocks if c is not None})
    if not isinstance(G, FiniteGroup) or all(G.mul(a, b) == G.mul(b, a)
                                             for a in G.elements() for b in G.elements()):
        return {k: (lambda: _random_element(G, rng)) for k in keys}
    parent = {k: k for k in keys}

    def find(k):
        while parent[k] != k:
            k = parent[k]
        return k

    def union(a, b):
        parent[find(a)] = find(b)

    for i, j in pairs:
        union(("block", i), ("block", j))
    for b, (_, c) in enumerate(blocks):
        if c is not None:
            union(("block", b), ("copy", c))
    subgroups = _cyclic_subgroups(G)
    chosen = {}
    out = {}
    for k in keys:
        root = find(k)
        if root not in chosen:
            chosen[root] = rng.choice(subgroups)
        sub = chosen[root]
        out[k] = (lambda sub=sub: rng.choice(sub))
    return out


def _unit(n: int, p: int, q: int) -> list:
    m = [[ZERO] * n for _ in range(n)]
    m[p][q] = ONE
    return m


def _transitive(pairs: set) -> set:
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        for (i, j), (k, l) in product(list(closed), repeat=2):
            if j == k and (i, l) not in closed:
                closed.add((i, l))
                changed = True
    return closed


def _layout(rng: random.Random, copies: int):
    """Blocks as ``(kind, copy)``; each copy has at least one natural block."""
    blocks = [(NAT, c) for c in range(copies)]
    for _ in range(rng.randint(0, 2)):
        kind = rng.choice([NAT, ADJ, TRIV, TRIV])
        blocks.append((kind, rng.randrange(copies) if kind != TRIV else None))
    rng.shuffle(blocks)
    return blocks


def _random_invertible(n: int, rng: random.Random, groups: list[list[int]] | None = None) -> Matrix:
    """Unimodular integer matrix; block-structured on ``groups`` of indices when given."""
    groups = groups if groups is not None else [list(range(n))]
    P = [[ZERO] * n for _ in range(n)]
    for idx in groups:
        k = len(idx)
        lower = [[ONE if a == b else (rng.randint(-2, 2) if a > b else ZERO) for b in range(k)]
                 for a in range(k)]
        upper = [[ONE if a == b else (rng.randint(-1, 1) if a < b else ZERO) for b in range(k)]
                 for a in range(k)]
        M = Matrix(lower, k) @ Matrix(upper, k)
        perm = list(range(k))
        rng.shuffle(perm)
        for a in range(k):
            for b in range(k):
                P[idx[a]][idx[perm[b]]] = M[a, b]
    return Matrix(P, n)


def random_instance(seed: int, group: str | None = None, max_radical: int = 6,
                    max_dim: int = 12, change_basis_: bool = True) -> Instance:
    """Random ``B0 + R0``; ``group`` in {None, "Z2", "S3", "Z"} adds a compatible grading."""
    rng = random.Random(seed)
    G = _group(group) if group is not None else None
    for _ in range(1000):
        copies = rng.choice([1, 1, 2])
        blocks = _layout(rng, copies)
        nb = len(blocks)
        scalars = [i for i in range(nb) if rng.random() < 0.4]
        pairs = {(i, j) for i in range(nb) for j in range(i + 1, nb) if rng.random() < 0.35}
        pairs = _transitive(pairs)
        sizes = [_SIZE[k] for k, _ in blocks]
        r_dim = len(scalars) + sum(sizes[i] * sizes[j] for i, j in pairs)
        if 1 <= r_dim <= max_radical and 3 * copies + r_dim <= max_dim:
            break
    else:
        raise RuntimeError("could not draw a random instance within the size limits")
    offsets = []
    n = 0
    for s in sizes:
        offsets.append(n)
        n += s

    mats, labels = [], []
    for c in range(copies):
        for x, name in enumerate("ehf"):
            m = [[ZERO] * n for _ in range(n)]
            for (kind, copy), off in zip(blocks, offsets):
                if copy == c and kind != TRIV:
                    rep = _REP[kind][x]
                    for a, row in enumerate(rep):
                        for b, v in enumerate(row):
                            m[off + a][off + b] = v
            mats.append(Matrix(m, n))
            labels.append(f"{name}{c + 1}")
    b0_dim = len(mats)
    for i in scalars:
        m = [[ZERO] * n for _ in range(n)]
        for a in range(sizes[i]):
            m[offsets[i] + a][offsets[i] + a] = ONE
        mats.append(Matrix(m, n))
        labels.append(f"z{i}")
    for i, j in sorted(pairs):
        for a in range(sizes[i]):
            for b in range(sizes[j]):
                mats.append(Matrix(_unit(n, offsets[i] + a, offsets[j] + b), n))
                labels.append(f"u{i}{j}_{a}{b}")
    L = from_matrices(mats, labels)
    dim = L.dim
    r0 = Subspace([tuple(ONE if k == i else ZERO for k in range(dim)) for i in range(b0_dim, dim)], dim)

    grading = None
    if G is not None:
        pick = _component_pickers(G, blocks, pairs, rng)
        s = [pick[("copy", c)]() for c in range(copies)]
        gv = [None] * n
        for b, ((kind, copy), off) in enumerate(zip(blocks, offsets)):
            base = pick[("block", b)]()
            if kind == TRIV:
                gv[off] = base
            elif kind == NAT:
                gv[off + 1] = base
                gv[off] = G.mul(s[copy], base)
            else:
                gv[off + 2] = base
                gv[off + 1] = G.mul(s[copy], base)
                gv[off] = G.mul(s[copy], gv[off + 1])
        degs = []
        for m in mats:
            ds = {G.mul(gv[p], G.inv(gv[q])) for p in range(n) for q in range(n) if m[p, q]}
            if len(ds) != 1:
                raise AssertionError("constructed basis element is not homogeneous")
            degs.append(ds.pop())
        grading = Grading(G, tuple(degs))

    P = Matrix.identity(dim)
    if change_basis_:
        if grading is not None:
            classes = {}
            for i, d in enumerate(grading.degrees):
                classes.setdefault(d, []).append(i)
            P = _random_invertible(dim, rng, list(classes.values()))
        else:
            P = _random_invertible(dim, rng)
        L = change_basis(L, P)
        Pi = P.inverse()
        r0 = r0.image(Pi)
        if grading is not None:
            grading = grading.change_basis(P)
    return Instance(L, grading, b0_dim, r0, P, tuple(blocks))
