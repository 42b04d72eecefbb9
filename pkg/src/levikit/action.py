"""Equivariant structures on a Lie algebra (or on a module over it).

Every structure exposes a list of linear operators whose common invariant
subspaces are exactly the invariant subspaces of the structure:

* grading: projections onto the homogeneous components
* comodule over H: ``T_k`` with ``rho(x) = sum_k T_k x (x) h_k``
* module over H: the action matrices of the basis ``h_k``
* cyclic action: ``phi`` and its inverse
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence, Union

from .errors import (
    ActionFailure,
    CoactionFailure,
    DimensionMismatch,
    GradingFailure,
    HLModuleFailure,
    InfiniteGroup,
    InternalInconsistency,
    NoIntegral,
    NormalizationImpossible,
    NotAnAutomorphism,
    NotAnIdeal,
    RepresentationFailure,
)
from .exactmat import ONE, ZERO, EchelonBasis, Matrix, Subspace, unit_vec
from .groups import FiniteGroup, GroupBackend
from .hopf import HopfAlgebra, Integral, dual_hopf, find_normalized_integral, group_algebra
from .liealg import LieAlgebra, is_ideal, nilradical, solvable_radical


def _zero_ops_sum(n: int):
    return [[ZERO] * n for _ in range(n)]


def _mat_comb(coeffs, mats, n: int) -> Matrix:
    out = _zero_ops_sum(n)
    for c, m in zip(coeffs, mats):
        if c:
            for i, row in enumerate(m.rows):
                o = out[i]
                for j, x in enumerate(row):
                    if x:
                        o[j] += c * x
    return Matrix._raw(tuple(tuple(r) for r in out), n)


def _restrict_op(op: Matrix, W: Subspace) -> Matrix:
    """Matrix of ``op|_W`` in the echelon basis of W (W must be op-stable)."""
    cols = []
    for w in W.rows:
        img = op.apply(w)
        if not W.contains_vector(img):
            raise InternalInconsistency("subspace is not stable under the structure")
        cols.append(W.coordinates(img))
    return Matrix.from_columns(cols, W.dim)


def _quotient_op(op: Matrix, I: Subspace) -> Matrix:
    """Matrix induced on ``V/I`` in the basis of non-pivot unit vectors."""
    comp = I.complement_indices()
    cols = []
    for c in comp:
        img = I.reduce(op.column(c))
        cols.append(tuple(img[k] for k in comp))
    return Matrix.from_columns(cols, len(comp))


# -- gradings -------------------------------------------------------------------

@dataclass(frozen=True)
class Grading:
    """Degree of each (homogeneous) basis vector in a group backend."""
    group: GroupBackend
    degrees: tuple

    @property
    def dim(self) -> int:
        return len(self.degrees)

    @cached_property
    def support(self) -> tuple:
        """Distinct degrees in order of first appearance."""
        seen = []
        for d in self.degrees:
            if d not in seen:
                seen.append(d)
        return tuple(seen)

    def projection(self, g) -> Matrix:
        return Matrix.diag([ONE if d == g else ZERO for d in self.degrees])

    def operators(self) -> list[Matrix]:
        return [self.projection(g) for g in self.support]

    def component(self, g) -> Subspace:
        n = self.dim
        return Subspace([unit_vec(n, i) for i, d in enumerate(self.degrees) if d == g], n)

    def degree_of(self, v):
        """Degree of a nonzero homogeneous vector, or None if v is not homogeneous."""
        ds = {self.degrees[i] for i, x in enumerate(v) if x}
        if len(ds) != 1:
            return None
        return next(iter(ds))

    def restrict(self, W: Subspace) -> "Grading":
        # echelon rows of a graded subspace are homogeneous; each takes its pivot's degree
        degs = []
        for row, p in zip(W.rows, W.pivots):
            d = self.degree_of(row)
            if d is None:
                raise GradingFailure("subspace is not graded", (p,))
            degs.append(d)
        return Grading(self.group, tuple(degs))

    def quotient(self, I: Subspace) -> "Grading":
        return Grading(self.group, tuple(self.degrees[c] for c in I.complement_indices()))

    def change_basis(self, P: Matrix) -> "Grading":
        degs = []
        for j, col in enumerate(P.columns()):
            d = self.degree_of(col)
            if d is None:
                raise GradingFailure(f"new basis vector {j} is not homogeneous", (j,))
            degs.append(d)
        return Grading(self.group, tuple(degs))

    def labels(self) -> list:
        return [self.group.label(d) for d in self.degrees]


def make_grading(group: GroupBackend, degrees: Sequence) -> Grading:
    return Grading(group, tuple(group.index(d) for d in degrees))


def trivial_grading(n: int, group: GroupBackend | None = None) -> Grading:
    from .groups import trivial_group

    group = group if group is not None else trivial_group()
    return Grading(group, (group.identity,) * n)


def validate_grading(L: LieAlgebra, g: Grading) -> Grading:
    if g.dim != L.dim:
        raise DimensionMismatch(f"{g.dim} degrees for a {L.dim}-dimensional algebra")
    G = g.group
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            want = G.mul(g.degrees[i], g.degrees[j])
            # [e_j, e_i] = -[e_i, e_j] must have degree g_j g_i as well
            other = G.mul(g.degrees[j], g.degrees[i])
            for k, _ in L._sparse[(i, j)]:
                if g.degrees[k] != want or want != other:
                    raise GradingFailure(
                        f"[{L.labels[i]}, {L.labels[j]}] has a component along {L.labels[k]} "
                        f"of degree {G.label(g.degrees[k])}, expected {G.label(want)}", (i, j, k))
    return g


# -- comodules ------------------------------------------------------------------

@dataclass(frozen=True)
class ComoduleStructure:
    """Coaction over ``hopf``: ``rho(e_i) = sum_{j,k} rho[i][j][k] e_j (x) h_k``.

    Stored as the operators ``T_k`` with ``T_k[j][i] = rho[i][j][k]``.
    """
    hopf: HopfAlgebra
    ops: tuple

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        if len(self.ops) != self.hopf.dim:
            raise DimensionMismatch("one coaction operator per Hopf basis element")
        shapes = {op.shape for op in self.ops}
        if len(shapes) > 1 or any(r != c for r, c in shapes):
            raise DimensionMismatch("coaction operators must be square and of equal size")

    @property
    def dim(self) -> int:
        return self.ops[0].nrows

    @classmethod
    def from_rho(cls, hopf: HopfAlgebra, rho, n: int | None = None) -> "ComoduleStructure":
        n = len(rho) if n is None else n
        m = hopf.dim
        ops = []
        for k in range(m):
            ops.append(Matrix([[rho[i][j][k] for i in range(n)] for j in range(n)], n))
        return cls(hopf, ops)

    @property
    def rho(self) -> list:
        n, m = self.dim, self.hopf.dim
        return [[[self.ops[k][j, i] for k in range(m)] for j in range(n)] for i in range(n)]

    def coact(self, x) -> list[tuple]:
        """``rho(x)`` as the list of vectors ``T_k x``."""
        return [op.apply(x) for op in self.ops]

    def operators(self) -> list[Matrix]:
        return list(self.ops)

    def restrict(self, W: Subspace) -> "ComoduleStructure":
        return ComoduleStructure(self.hopf, [_restrict_op(op, W) for op in self.ops])

    def quotient(self, I: Subspace) -> "ComoduleStructure":
        return ComoduleStructure(self.hopf, [_quotient_op(op, I) for op in self.ops])

    def change_basis(self, P: Matrix) -> "ComoduleStructure":
        Pi = P.inverse()
        return ComoduleStructure(self.hopf, [Pi @ op @ P for op in self.ops])


def trivial_comodule(hopf: HopfAlgebra, n: int) -> ComoduleStructure:
    """``rho(x) = x (x) 1``."""
    return ComoduleStructure(hopf, [Matrix.identity(n) * u for u in hopf.unit])


def validate_comodule(c: ComoduleStructure) -> ComoduleStructure:
    """Coassociativity and counit, without reference to any bracket."""
    h, ops, n = c.hopf, c.ops, c.dim
    m = h.dim
    for l in range(m):
        for k in range(m):
            want = _mat_comb([h.comult[p][l][k] for p in range(m)], ops, n)
            if ops[l] @ ops[k] != want:
                raise CoactionFailure(f"coassociativity fails on legs ({l}, {k})", (l, k))
    if _mat_comb(h.counit, ops, n) != Matrix.identity(n):
        raise CoactionFailure("counit law (id (x) eps) rho = id fails")
    return c


def validate_coaction(L: LieAlgebra, c: ComoduleStructure) -> ComoduleStructure:
    if c.dim != L.dim:
        raise DimensionMismatch(f"coaction on dimension {c.dim}, algebra has dimension {L.dim}")
    validate_comodule(c)
    h, ops, n = c.hopf, c.ops, L.dim
    images = [[op.column(i) for i in range(n)] for op in ops]
    for i in range(n):
        for j in range(i + 1, n):
            lhs = [op.apply(L.c[i][j]) for op in ops]
            rhs = [[ZERO] * n for _ in range(h.dim)]
            for k, l, p, mu in h.product_pairs:
                b = L.bracket(images[k][i], images[l][j])
                tgt = rhs[p]
                for q, x in enumerate(b):
                    if x:
                        tgt[q] += mu * x
            for p in range(h.dim):
                if lhs[p] != tuple(rhs[p]):
                    raise CoactionFailure(
                        f"rho([{L.labels[i]}, {L.labels[j]}]) differs along {h.labels[p]}", (i, j, p))
    return c


def grading_to_comodule(L: LieAlgebra | None, g: Grading) -> ComoduleStructure:
    """Coaction ``rho(a) = a (x) g`` for homogeneous a of degree g."""
    if not isinstance(g.group, FiniteGroup):
        raise InfiniteGroup("only gradings by finite groups become comodules")
    H, _ = group_algebra(g.group)
    ops = [g.projection(k) for k in g.group.elements()]
    c = ComoduleStructure(H, ops)
    if L is not None:
        validate_coaction(L, c)
    return c


# -- modules ----------------------------------------------------------------------

@dataclass(frozen=True)
class ModuleStructure:
    """Action of ``hopf``: ``act[k]`` is the matrix of ``h_k``."""
    hopf: HopfAlgebra
    act: tuple

    def __post_init__(self):
        object.__setattr__(self, "act", tuple(self.act))
        if len(self.act) != self.hopf.dim:
            raise DimensionMismatch("one action matrix per Hopf basis element")
        shapes = {a.shape for a in self.act}
        if len(shapes) > 1 or any(r != c for r, c in shapes):
            raise DimensionMismatch("action matrices must be square and of equal size")

    @property
    def dim(self) -> int:
        return self.act[0].nrows

    def operators(self) -> list[Matrix]:
        return list(self.act)

    def acting(self, h) -> Matrix:
        return _mat_comb(h, self.act, self.dim)

    def restrict(self, W: Subspace) -> "ModuleStructure":
        return ModuleStructure(self.hopf, [_restrict_op(a, W) for a in self.act])

    def quotient(self, I: Subspace) -> "ModuleStructure":
        return ModuleStructure(self.hopf, [_quotient_op(a, I) for a in self.act])

    def change_basis(self, P: Matrix) -> "ModuleStructure":
        Pi = P.inverse()
        return ModuleStructure(self.hopf, [Pi @ a @ P for a in self.act])


def trivial_action(hopf: HopfAlgebra, n: int) -> ModuleStructure:
    """``h . x = eps(h) x``."""
    return ModuleStructure(hopf, [Matrix.identity(n) * e for e in hopf.counit])


def validate_action(L: LieAlgebra, a: ModuleStructure) -> ModuleStructure:
    if a.dim != L.dim:
        raise DimensionMismatch(f"action on dimension {a.dim}, algebra has dimension {L.dim}")
    h, act, n = a.hopf, a.act, L.dim
    m = h.dim
    for k in range(m):
        for l in range(m):
            if act[k] @ act[l] != _mat_comb(h.mult[k][l], act, n):
                raise ActionFailure(f"({h.labels[k]} {h.labels[l]}) . x != {h.labels[k]} . ({h.labels[l]} . x)",
                                    (k, l))
    if _mat_comb(h.unit, act, n) != Matrix.identity(n):
        raise ActionFailure("the unit does not act as the identity")
    images = [[op.column(i) for i in range(n)] for op in act]
    for p in range(m):
        for i in range(n):
            for j in range(i + 1, n):
                lhs = act[p].apply(L.c[i][j])
                rhs = [ZERO] * n
                for k, c_ in enumerate(h.comult[p]):
                    for l, d in enumerate(c_):
                        if d:
                            b = L.bracket(images[k][i], images[l][j])
                            for q, x in enumerate(b):
                                if x:
                                    rhs[q] += d * x
                if lhs != tuple(rhs):
                    raise ActionFailure(
                        f"{h.labels[p]} . [{L.labels[i]}, {L.labels[j]}] != "
                        f"[{h.labels[p]}_(1) {L.labels[i]}, {h.labels[p]}_(2) {L.labels[j]}]", (p, i, j))
    return a


def comodule_of_module(L: LieAlgebra | None, a: ModuleStructure) -> ComoduleStructure:
    """Comodule over ``H*`` with ``rho(x) = sum_k (h_k . x) (x) h_k^*``."""
    c = ComoduleStructure(dual_hopf(a.hopf), a.act)
    if L is not None:
        validate_coaction(L, c)
    return c


def module_of_comodule(L: LieAlgebra | None, c: ComoduleStructure) -> ModuleStructure:
    """Inverse of :func:`comodule_of_module`: ``H*`` acts by ``f . x = f(x_(1)) x_(0)``."""
    a = ModuleStructure(dual_hopf(c.hopf), c.ops)
    if L is not None:
        validate_action(L, a)
    return a


# -- cyclic actions ----------------------------------------------------------------

@dataclass(frozen=True)
class CyclicAction:
    """The group generated by one automorphism ``phi``."""
    phi: Matrix

    @property
    def dim(self) -> int:
        return self.phi.nrows

    @cached_property
    def phi_inverse(self) -> Matrix:
        return self.phi.inverse()

    def operators(self) -> list[Matrix]:
        return [self.phi, self.phi_inverse]

    def restrict(self, W: Subspace) -> "CyclicAction":
        return CyclicAction(_restrict_op(self.phi, W))

    def quotient(self, I: Subspace) -> "CyclicAction":
        return CyclicAction(_quotient_op(self.phi, I))

    def change_basis(self, P: Matrix) -> "CyclicAction":
        return CyclicAction(P.inverse() @ self.phi @ P)


def validate_automorphism(L: LieAlgebra, a: CyclicAction) -> CyclicAction:
    phi = a.phi
    if phi.shape != (L.dim, L.dim):
        raise DimensionMismatch("automorphism must be n x n")
    if phi.rank() != L.dim:
        raise NotAnAutomorphism("phi is not invertible")
    cols = phi.columns()
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            if phi.apply(L.c[i][j]) != L.bracket(cols[i], cols[j]):
                raise NotAnAutomorphism(
                    f"phi([{L.labels[i]}, {L.labels[j]}]) != [phi {L.labels[i]}, phi {L.labels[j]}]", (i, j))
    return a


Structure = Union[Grading, ComoduleStructure, ModuleStructure, CyclicAction]


def validate_structure(L: LieAlgebra, s: Structure | None):
    if s is None:
        return None
    if isinstance(s, Grading):
        return validate_grading(L, s)
    if isinstance(s, ComoduleStructure):
        return validate_coaction(L, s)
    if isinstance(s, ModuleStructure):
        return validate_action(L, s)
    if isinstance(s, CyclicAction):
        return validate_automorphism(L, s)
    raise TypeError(f"unknown structure {type(s).__name__}")


# -- invariance ---------------------------------------------------------------------

def is_invariant(structure: Structure | None, w: Subspace) -> bool:
    if structure is None:
        return True
    return all(w.contains_vector(op.apply(v)) for op in structure.operators() for v in w.rows)


def invariant_hull(structure: Structure | None, i: Subspace, L: LieAlgebra | None = None,
                   ideal: bool = False) -> Subspace:
    """Smallest invariant subspace containing ``i``.

    With ``ideal=True`` (which needs ``L``), ``i`` must be an ideal and the
    result is checked to be one as well.
    """
    if ideal:
        if L is None:
            raise ValueError("ideal=True needs the algebra")
        if not is_ideal(L, i):
            raise NotAnIdeal("input subspace is not an ideal")
    if structure is None:
        return i
    ops = structure.operators()
    ech = EchelonBasis(i.ambient_dim, i.rows)
    frontier = list(i.rows)
    while frontier:
        nxt = []
        for v in frontier:
            for op in ops:
                w = op.apply(v)
                if ech.add(w) is not None:
                    nxt.append(w)
        frontier = nxt
    out = ech.subspace()
    if ideal and not is_ideal(L, out):
        raise InternalInconsistency("invariant hull of an ideal is not an ideal")
    return out


# -- integrals on the acting side ------------------------------------------------------

@dataclass(frozen=True)
class AveragingRoute:
    """How to average for a structure: natively graded, or a comodule with an integral."""
    grading: Grading | None = None
    comodule: ComoduleStructure | None = None
    integral: Integral | None = None


def averaging_route(structure: Structure | None):
    """Return an :class:`AveragingRoute`, or raise the hypothesis failure that blocks one."""
    from .errors import IntegralNotAdInvariant, NoAveragingRoute

    if structure is None or isinstance(structure, Grading):
        return AveragingRoute(grading=structure)
    if isinstance(structure, CyclicAction):
        raise NoAveragingRoute("a cyclic automorphism action has no finite-dimensional integral to average with")
    if isinstance(structure, ModuleStructure):
        comod = comodule_of_module(None, structure)
    else:
        comod = structure
    try:
        t = find_normalized_integral(comod.hopf)
    except (NoIntegral, NormalizationImpossible) as e:
        raise NoAveragingRoute(f"no normalized integral on the coacting Hopf algebra: {e}",
                               **e.details) from e
    if not t.ad_invariant:
        raise IntegralNotAdInvariant("the normalized integral found is not ad-invariant")
    return AveragingRoute(comodule=comod, integral=t)


def _theorem_applies(structure: Structure | None) -> bool:
    """Whether stability of radicals is guaranteed (and therefore asserted)."""
    if structure is None:
        return True
    if isinstance(structure, Grading):
        return isinstance(structure.group, FiniteGroup)
    if isinstance(structure, CyclicAction):
        return False
    hopf = structure.hopf if isinstance(structure, ComoduleStructure) else dual_hopf(structure.hopf)
    try:
        t = find_normalized_integral(hopf)
    except (NoIntegral, NormalizationImpossible):
        return False
    return t.ad_invariant


@dataclass(frozen=True)
class StabilityReport:
    R: Subspace
    N: Subspace
    R_invariant: bool
    N_invariant: bool
    guaranteed: bool = field(default=False)


def radical_stability_report(L: LieAlgebra, structure: Structure | None) -> StabilityReport:
    R = solvable_radical(L)
    N = nilradical(L)
    r_inv = is_invariant(structure, R)
    n_inv = is_invariant(structure, N)
    guaranteed = _theorem_applies(structure)
    if guaranteed and not (r_inv and n_inv):
        raise InternalInconsistency(
            "radicals must be invariant when a normalized ad-invariant integral exists",
            R_invariant=r_inv, N_invariant=n_inv)
    return StabilityReport(R, N, r_inv, n_inv, guaranteed)


# -- (H, L)-modules -------------------------------------------------------------------------

@dataclass(frozen=True)
class HLModule:
    """Representation ``psi`` of L on V, with compatible structures on L and V.

    ``psi[i]`` is the matrix of ``psi(e_i)``; ``struct_L`` and ``struct_V`` are
    both gradings over one group or both comodules over one Hopf algebra (or
    both None for a plain L-module).
    """
    algebra: LieAlgebra
    psi: tuple
    struct_L: Grading | ComoduleStructure | None = None
    struct_V: Grading | ComoduleStructure | None = None

    def __post_init__(self):
        object.__setattr__(self, "psi", tuple(self.psi))

    @property
    def space_dim(self) -> int:
        return self.psi[0].nrows if self.psi else 0

    def act(self, x) -> Matrix:
        return _mat_comb(x, self.psi, self.space_dim)


def adjoint_module(L: LieAlgebra, structure: Grading | ComoduleStructure | None = None) -> HLModule:
    return HLModule(L, L.ad_basis, structure, structure)


def validate_representation(L: LieAlgebra, psi: Sequence[Matrix]) -> None:
    if len(psi) != L.dim:
        raise DimensionMismatch("one representation matrix per basis vector")
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = psi[i] @ psi[j] - psi[j] @ psi[i]
            if lhs != _mat_comb(L.c[i][j], psi, psi[0].nrows):
                raise RepresentationFailure(
                    f"psi([{L.labels[i]}, {L.labels[j]}]) != [psi {L.labels[i]}, psi {L.labels[j]}]", (i, j))


def _hl_identity(m: HLModule, swapped: bool) -> tuple | None:
    """First basis pair violating the (H,L)-module identity, or None."""
    L, psi = m.algebra, m.psi
    sL, sV = m.struct_L, m.struct_V
    dV = m.space_dim
    if isinstance(sL, Grading):
        G = sL.group
        for i in range(L.dim):
            for v in range(dV):
                a, b = sL.degrees[i], sV.degrees[v]
                want = G.mul(b, a) if swapped else G.mul(a, b)
                col = psi[i].column(v)
                for q, x in enumerate(col):
                    if x and sV.degrees[q] != want:
                        return (i, v, q)
        return None
    h = sL.hopf
    # T^V_p psi(a) = sum_{k,l} mu[k][l][p] psi(T^L_k a) T^V_l   (legs swapped: mu[l][k][p])
    TL, TV = sL.ops, sV.ops
    for i in range(L.dim):
        psi_T = [m.act(T.column(i)) for T in TL]
        for p in range(h.dim):
            lhs = TV[p] @ psi[i]
            rhs = Matrix.zeros(dV, dV)
            for k, l, q, mu in h.product_pairs:
                if swapped:
                    k, l = l, k
                if q == p:
                    rhs = rhs + (psi_T[k] @ TV[l]) * mu
            if lhs != rhs:
                return (i, p)
    return None


def validate_hlmodule(m: HLModule) -> bool:
    """Check the representation and (H,L)-compatibility; return the symmetric flag."""
    L = m.algebra
    validate_representation(L, m.psi)
    if m.struct_L is None and m.struct_V is None:
        return True
    sL, sV = m.struct_L, m.struct_V
    if type(sL) is not type(sV):
        raise HLModuleFailure("structures on L and V must be of the same kind")
    if sL.dim != L.dim or sV.dim != m.space_dim:
        raise DimensionMismatch("structure dimensions do not match the module")
    if isinstance(sL, Grading):
        if sL.group != sV.group:
            raise HLModuleFailure("gradings on L and V use different groups")
    elif isinstance(sL, ComoduleStructure):
        if sL.hopf != sV.hopf:
            raise HLModuleFailure("coactions on L and V use different Hopf algebras")
        validate_comodule(sV)
    else:
        raise HLModuleFailure(f"unsupported structure {type(sL).__name__} on an (H,L)-module")
    bad = _hl_identity(m, swapped=False)
    if bad is not None:
        raise HLModuleFailure("rho_V(psi(a) v) != psi(a_(0)) v_(0) (x) a_(1) v_(1)", bad)
    return _hl_identity(m, swapped=True) is None
