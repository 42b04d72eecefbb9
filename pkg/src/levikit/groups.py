"""Group backends for gradings: finite multiplication tables and Z^k."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Sequence

from .errors import NotAGroup


@dataclass(frozen=True)
class FiniteGroup:
    """Group given by a multiplication table; elements are indices.

    ``table[a][b]`` is the index of the product ``a*b``.
    """
    labels: tuple
    table: tuple
    identity: int
    kind: str = field(default="finite_table", init=False)

    is_finite = True

    @property
    def order(self) -> int:
        return len(self.labels)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        for b in self.elements():
            if self.table[a][b] == self.identity:
                return b
        raise NotAGroup(f"element {self.labels[a]} has no inverse", (a,))

    def index(self, label) -> int:
        if isinstance(label, int) and not isinstance(label, bool):
            if not 0 <= label < self.order:
                raise NotAGroup(f"element index {label} out of range", (label,))
            return label
        try:
            return self.labels.index(label)
        except ValueError:
            raise NotAGroup(f"unknown group element {label!r}") from None

    def label(self, a: int) -> str:
        return self.labels[a]

    def key(self, a: int):
        return a


@dataclass(frozen=True)
class FreeAbelianGroup:
    """Z^rank under addition; elements are integer tuples."""
    rank: int
    kind: str = field(default="free_abelian", init=False)

    is_finite = False

    @property
    def identity(self) -> tuple:
        return (0,) * self.rank

    def mul(self, a: tuple, b: tuple) -> tuple:
        return tuple(x + y for x, y in zip(a, b))

    def inv(self, a: tuple) -> tuple:
        return tuple(-x for x in a)

    def index(self, label) -> tuple:
        if isinstance(label, int) and not isinstance(label, bool):
            label = (label,)
        t = tuple(int(x) for x in label)
        if len(t) != self.rank:
            raise NotAGroup(f"element {label!r} is not in Z^{self.rank}")
        return t

    def label(self, a: tuple):
        return list(a)

    def key(self, a: tuple):
        return a


GroupBackend = FiniteGroup | FreeAbelianGroup


def finite_group(labels: Sequence, table: Sequence[Sequence[int]], identity: int | None = None) -> FiniteGroup:
    """Validate a multiplication table (closure, identity, inverses, associativity)."""
    m = len(labels)
    tab = tuple(tuple(int(x) for x in row) for row in table)
    if len(tab) != m or any(len(r) != m for r in tab):
        raise NotAGroup(f"table must be {m}x{m}")
    for a in range(m):
        for b in range(m):
            if not 0 <= tab[a][b] < m:
                raise NotAGroup(f"product of {a} and {b} is out of range", (a, b))
    if identity is None:
        ids = [e for e in range(m) if all(tab[e][a] == a == tab[a][e] for a in range(m))]
        if not ids:
            raise NotAGroup("no identity element")
        identity = ids[0]
    if any(tab[identity][a] != a or tab[a][identity] != a for a in range(m)):
        raise NotAGroup(f"element {identity} is not an identity", (identity,))
    for a, b, c in product(range(m), repeat=3):
        if tab[tab[a][b]][c] != tab[a][tab[b][c]]:
            raise NotAGroup(f"associativity fails on ({a}, {b}, {c})", (a, b, c))
    G = FiniteGroup(tuple(str(x) for x in labels), tab, identity)
    for a in range(m):
        G.inv(a)
    return G


def cyclic_group(n: int) -> FiniteGroup:
    labels = [str(i) for i in range(n)]
    return finite_group(labels, [[(a + b) % n for b in range(n)] for a in range(n)], 0)


def trivial_group() -> FiniteGroup:
    return finite_group(["e"], [[0]], 0)


def symmetric_group3() -> FiniteGroup:
    """S_3 with product ``(g*h)(i) = g(h(i))``."""
    perms = list(permutations(range(3)))
    names = {
        (0, 1, 2): "e", (1, 0, 2): "(12)", (2, 1, 0): "(13)", (0, 2, 1): "(23)",
        (1, 2, 0): "(123)", (2, 0, 1): "(132)",
    }
    order = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
    perms.sort(key=lambda p: order.index(names[p]))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(g[h[i]] for i in range(3))] for h in perms] for g in perms]
    return finite_group(order, table, 0)


def free_abelian(rank: int) -> FreeAbelianGroup:
    return FreeAbelianGroup(rank)
