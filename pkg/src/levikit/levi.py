"""Levi decompositions, simple splittings, Weyl decompositions and B + S + N.

All subspaces returned are expressed in the coordinates of the algebra (or
module) they were computed for. Theorem hypotheses are checked at runtime and
surface as :class:`~levikit.errors.HypothesisFailure` subclasses; a failing
conclusion surfaces as :class:`~levikit.errors.InternalInconsistency`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .action import (
    AveragingRoute,
    ComoduleStructure,
    CyclicAction,
    HLModule,
    Structure,
    averaging_route,
    invariant_hull,
    is_invariant,
    validate_automorphism,
    validate_hlmodule,
    validate_structure,
)
from .cohomology import Cochain, solve_coboundary
from .errors import (
    IntegralNotAdInvariant,
    InternalInconsistency,
    LevikitError,
    NoAveragingRoute,
    NoIntegral,
    NoSolution,
    NormalizationImpossible,
    NotCompletelyReducible,
    NotSemisimple,
    RadicalNotInvariant,
    SplittingUndecided,
    SymmetryRequired,
)
from .exactmat import ZERO, Matrix, Subspace, kernel, nullspace, solve
from .hopf import Integral, find_normalized_integral
from .liealg import (
    LieAlgebra,
    associative_hull,
    bracket_span,
    centralizer,
    is_ideal,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
    killing_nondegenerate,
    nilradical,
    quotient_algebra,
    solvable_radical,
    subalgebra,
)
from .maschke import average, average_equivariant_projection
from .polys import factor_rational, idempotent_polynomials, minimal_polynomial, poly_eval

# deterministic pseudo-randomness for generic elements
_SEED = 20240917


def _route(structure: Structure | None, route: AveragingRoute | None) -> AveragingRoute:
    return route if route is not None else averaging_route(structure)


def _side(route: AveragingRoute):
    """The structure used for averaging (a grading or a comodule), or None."""
    return route.grading if route.grading is not None else route.comodule


# -- Levi subalgebra -----------------------------------------------------------------

@dataclass(frozen=True)
class LeviResult:
    B: Subspace
    R: Subspace


def levi_decompose(L: LieAlgebra, structure: Structure | None = None,
                   route: AveragingRoute | None = None) -> LeviResult:
    """Semisimple subalgebra B with ``L = B + R``; invariant when a structure is given."""
    validate_structure(L, structure)
    R = solvable_radical(L)
    if structure is not None and not is_invariant(structure, R):
        raise RadicalNotInvariant("the solvable radical is not invariant under the structure")
    if R.dim == 0:
        return LeviResult(L.whole(), R)
    if R.dim == L.dim:
        return LeviResult(L.zero(), R)
    route = _route(structure, route)
    B = _levi(L, R, _side(route), route.integral)
    _check_levi(L, B, R, structure)
    return LeviResult(B, R)


def _check_levi(L: LieAlgebra, B: Subspace, R: Subspace, structure) -> None:
    if B.dim + R.dim != L.dim or (B & R).dim:
        raise InternalInconsistency("B and R are not complementary")
    if not is_subalgebra(L, B):
        raise InternalInconsistency("B is not a subalgebra")
    if B.dim and not killing_nondegenerate(subalgebra(L, B).algebra):
        raise InternalInconsistency("Killing form of B is degenerate")
    if not is_invariant(structure, B):
        raise InternalInconsistency("B is not invariant")


def _levi(L: LieAlgebra, R: Subspace, side, t: Integral | None) -> Subspace:
    n = L.dim
    if R.dim == 0:
        return L.whole()
    if R.dim == n:
        return L.zero()
    D = bracket_span(L, R, R)
    if D.dim:
        # induction on dim R: first modulo [R, R], then inside the preimage
        quot = quotient_algebra(L, D)
        side_q = side.quotient(D) if side is not None else None
        Bq = _levi(quot.algebra, R.image(quot.projection), side_q, t)
        L1 = Bq.image(quot.section) + D
        sub = subalgebra(L, L1)
        side1 = side.restrict(L1) if side is not None else None
        D1 = Subspace([L1.coordinates(v) for v in D.rows], L1.dim)
        return _levi(sub.algebra, D1, side1, t).image(sub.inclusion)
    return _levi_abelian(L, R, side, t)


def _levi_abelian(L: LieAlgebra, R: Subspace, side, t: Integral | None) -> Subspace:
    """Base case [R, R] = 0: correct a colinear section by a colinear 1-cochain."""
    quot = quotient_algebra(L, R)
    Lq = quot.algebra
    q, dR = Lq.dim, R.dim
    side_q = side.quotient(R) if side is not None else None
    side_R = side.restrict(R) if side is not None else None
    r = quot.section
    if side is not None:
        r = average(r, side_q, side, t, pi=quot.projection)
    rcols = r.columns()
    psi = [Matrix.from_columns([R.coordinates(L.bracket(rcols[a], v)) for v in R.rows], dR)
           for a in range(q)]

    def phi(a, b):
        v = L.bracket(rcols[a], rcols[b])
        w = r.apply(Lq.c[a][b])
        return R.coordinates(tuple(x - y for x, y in zip(v, w)))

    Phi = Cochain.from_function(q, dR, 2, phi)
    if side is not None:
        if not validate_hlmodule(HLModule(Lq, psi, side_q, side_R)):
            raise SymmetryRequired("the radical is not a symmetric (H, L/R)-module")
    omega = solve_coboundary(Lq, psi, Phi, colinear=side is not None,
                             struct_L=side_q, struct_V=side_R, t=t)
    s = r - R.inclusion() @ omega
    return Subspace.from_columns(s)


# -- simple ideals and H-simple components ---------------------------------------------

def _commutant(ops, d: int) -> list[Matrix]:
    """Basis of ``{X : X op = op X for every op}``."""
    rows = []
    for op in ops:
        nz = [(a, b, x) for a in range(d) for b in range(d) if (x := op[a, b])]
        for a in range(d):
            for c in range(d):
                r = [ZERO] * (d * d)
                # (X op)[a][c] - (op X)[a][c]
                for b, cc, x in ((b, cc, x) for b, cc, x in nz if cc == c):
                    r[a * d + b] += x
                for aa, b, x in ((aa, b, x) for aa, b, x in nz if aa == a):
                    r[b * d + c] -= x
                if any(r):
                    rows.append(r)
    if not rows:
        return _all_matrices(d)
    return [Matrix.unflatten(v, d, d) for v in nullspace(Matrix(rows, d * d))]


def _all_matrices(d: int) -> list[Matrix]:
    out = []
    for a in range(d):
        for b in range(d):
            m = [[0] * d for _ in range(d)]
            m[a][b] = 1
            out.append(Matrix(m, d))
    return out


def _generic_element(basis: list[Matrix], rng: random.Random, spread: int) -> Matrix:
    d = basis[0].nrows
    out = Matrix.zeros(d, d)
    for b in basis:
        out = out + b * rng.randint(-spread, spread)
    return out


def simple_ideals(K: LieAlgebra) -> list[Subspace]:
    """Simple ideals of a semisimple K via central idempotents of its adjoint hull."""
    n = K.dim
    if n == 0:
        return []
    hull = associative_hull(K.ad_basis, n)
    gens = K.ad_basis
    rows = []
    for g in gens:
        comms = [(a @ g - g @ a).flatten() for a in hull.basis]
        for p in range(n * n):
            r = [c[p] for c in comms]
            if any(r):
                rows.append(r)
    coeffs = nullspace(Matrix(rows, hull.dim)) if rows else [
        tuple(1 if i == j else 0 for i in range(hull.dim)) for j in range(hull.dim)]
    center = []
    for c in coeffs:
        m = Matrix.zeros(n, n)
        for x, b in zip(c, hull.basis):
            if x:
                m = m + b * x
        center.append(m)
    if len(center) == 1:
        return [K.whole()]
    rng = random.Random(_SEED)
    for attempt in range(64):
        z = _generic_element(center, rng, 3 + attempt)
        mp = minimal_polynomial(z)
        if len(mp) - 1 == len(center):
            break
    else:
        raise InternalInconsistency("no generator found for the center of the adjoint hull")
    ideals = []
    for u in idempotent_polynomials(mp):
        e = poly_eval(u, z)
        ideals.append(Subspace.from_columns(e))
    ideals.sort(key=lambda s: s.rows)
    total = Subspace([], n)
    for I in ideals:
        total = total + I
    if total.dim != n or sum(I.dim for I in ideals) != n:
        raise InternalInconsistency("central idempotents do not split the algebra")
    return ideals


def _split(K: LieAlgebra, side) -> list[Subspace]:
    simples = simple_ideals(K)
    if side is None:
        return simples
    comps = []
    remaining = simples
    current = K.whole()
    while remaining:
        hulls = [invariant_hull(side, I, K, ideal=True) for I in remaining]
        minimal = [h for h in hulls if not any(o.dim < h.dim and o <= h for o in hulls)]
        Bt = min(minimal, key=lambda s: s.rows)
        rest = [I for I in remaining if not I <= Bt]
        B0 = Subspace([], K.dim)
        for I in rest:
            B0 = B0 + I
        if centralizer(K, Bt) & current != B0:
            raise InternalInconsistency("centralizer of the minimal invariant ideal is not its complement")
        if not is_invariant(side, B0):
            raise InternalInconsistency("centralizer of an invariant ideal is not invariant")
        comps.append(Bt)
        remaining = rest
        current = B0
    comps.sort(key=lambda s: s.rows)
    return comps


def semisimple_split(L: LieAlgebra, B: Subspace | None = None,
                     structure: Structure | None = None) -> list[Subspace]:
    """Decompose the semisimple subalgebra B into invariant ideals that are H-simple."""
    B = L.whole() if B is None else B
    if B.dim == 0:
        return []
    sub = subalgebra(L, B)
    K = sub.algebra
    if not killing_nondegenerate(K):
        raise NotSemisimple("Killing form is degenerate")
    if structure is not None and not is_invariant(structure, B):
        raise InternalInconsistency("B is not invariant under the structure")
    side = structure.restrict(B) if structure is not None else None
    comps = _split(K, side)
    _check_split(K, side, comps)
    return [c.image(sub.inclusion) for c in comps]


def _check_split(K: LieAlgebra, side, comps: list[Subspace]) -> None:
    total = Subspace([], K.dim)
    for c in comps:
        total = total + c
    if total.dim != K.dim or sum(c.dim for c in comps) != K.dim:
        raise InternalInconsistency("components do not sum directly to B")
    for a, b in combinations(comps, 2):
        if bracket_span(K, a, b).dim:
            raise InternalInconsistency("components do not commute")
    for c in comps:
        if not is_ideal(K, c) or not is_invariant(side, c):
            raise InternalInconsistency("component is not an invariant ideal")
        sub = subalgebra(K, c)
        again = _split(sub.algebra, side.restrict(c) if side is not None else None)
        if len(again) != 1:
            raise InternalInconsistency("a component splits further")


# -- Weyl decomposition -------------------------------------------------------------------

def _restrict_rep(psi, W: Subspace) -> list[Matrix]:
    out = []
    for p in psi:
        cols = []
        for w in W.rows:
            img = p.apply(w)
            if not W.contains_vector(img):
                raise InternalInconsistency("subspace is not a submodule")
            cols.append(W.coordinates(img))
        out.append(Matrix.from_columns(cols, W.dim))
    return out


def equivariant_projection(psi, W: Subspace) -> Matrix:
    """A projection onto the submodule W commuting with every ``psi`` (plain L-module)."""
    d = W.ambient_dim
    k = W.dim
    psiW = _restrict_rep(psi, W)
    # unknowns Y (k x d), index a*d + b
    rows, rhs = [], []
    for r, w in enumerate(W.rows):
        for a in range(k):
            row = [ZERO] * (k * d)
            for b, x in enumerate(w):
                if x:
                    row[a * d + b] = x
            rows.append(row)
            rhs.append(1 if a == r else 0)
    for p, pw in zip(psi, psiW):
        # (Y p)[a][c] - (pw Y)[a][c] = 0
        for a in range(k):
            for c in range(d):
                row = [ZERO] * (k * d)
                for b in range(d):
                    x = p[b, c]
                    if x:
                        row[a * d + b] += x
                for b in range(k):
                    x = pw[a, b]
                    if x:
                        row[b * d + c] -= x
                if any(row):
                    rows.append(row)
                    rhs.append(0)
    try:
        sol = solve(Matrix(rows, k * d), rhs)
    except NoSolution:
        raise NotCompletelyReducible("submodule has no L-invariant complement") from None
    Y = Matrix([sol.x[a * d:(a + 1) * d] for a in range(k)], d)
    return W.inclusion() @ Y


def _proper_submodule(ops, d: int) -> Subspace | None:
    """A proper nonzero subspace stable under ``ops``, or None when the
    commutant is a field (so the module is irreducible)."""
    C = _commutant(ops, d)
    if len(C) == 1:
        return None
    rng = random.Random(_SEED)
    candidates = list(C)
    candidates += [a @ b for a, b in combinations(C[:6], 2)]
    candidates += [_generic_element(C, rng, 4) for _ in range(16)]
    commutative = all(a @ b == b @ a for a, b in combinations(C, 2))
    field_witness = False
    for c in candidates:
        mp = minimal_polynomial(c)
        facs = factor_rational(mp)
        if len(facs) > 1 or facs[0][1] > 1:
            W = kernel(poly_eval(facs[0][0], c))
            if 0 < W.dim < d:
                return W
        elif len(mp) - 1 == len(C):
            field_witness = True
    if commutative and field_witness:
        return None
    raise SplittingUndecided(
        f"commutant of dimension {len(C)} yielded neither a zero divisor nor a field certificate")


def _radical_submodule(ops, d: int) -> Subspace:
    """``J(A) V`` for the unital hull A of ``ops``; zero iff V is completely reducible.

    J(A) is the trace-form radical (characteristic 0).
    """
    hull = associative_hull([Matrix.identity(d)] + list(ops), d)
    J = nullspace(hull.trace_gram)
    W = Subspace([], d)
    for c in J:
        a = Matrix.zeros(d, d)
        for x, b in zip(c, hull.basis):
            if x:
                a = a + b * x
        W = W + Subspace.from_columns(a)
    return W


def _weyl_route(m: HLModule, t: Integral | None) -> Integral | None:
    if isinstance(m.struct_V, ComoduleStructure) and t is None:
        try:
            t = find_normalized_integral(m.struct_V.hopf)
        except (NoIntegral, NormalizationImpossible) as e:
            raise NoAveragingRoute(f"no normalized integral: {e}") from e
        if not t.ad_invariant:
            raise IntegralNotAdInvariant("normalized integral is not ad-invariant")
    return t


def weyl_decompose(m: HLModule, t: Integral | None = None) -> list[Subspace]:
    """Split V into invariant L-submodules without proper nonzero invariant submodules."""
    validate_hlmodule(m)
    t = _weyl_route(m, t)
    d = m.space_dim
    ops = list(m.psi) + (m.struct_V.operators() if m.struct_V is not None else [])
    if d:
        W = _radical_submodule(ops, d)
        if W.dim:
            raise NotCompletelyReducible(
                "the acting algebra has a nonzero radical; its image is a submodule without invariant complement",
                submodule=W)
    parts = _weyl(m, t)
    total = Subspace([], d)
    for p in parts:
        total = total + p
    if total.dim != d or sum(p.dim for p in parts) != d:
        raise InternalInconsistency("Weyl components do not sum directly to V")
    for p in parts:
        if not is_invariant(m.struct_V, p):
            raise InternalInconsistency("Weyl component is not invariant")
        if any(not p.contains_vector(a.apply(v)) for a in m.psi for v in p.rows):
            raise InternalInconsistency("Weyl component is not a submodule")
    return sorted(parts, key=lambda s: s.rows)


def _weyl(m: HLModule, t: Integral | None) -> list[Subspace]:
    d = m.space_dim
    if d == 0:
        return []
    ops = list(m.psi) + (m.struct_V.operators() if m.struct_V is not None else [])
    W = _proper_submodule(ops, d)
    if W is None:
        return [Subspace.full(d)]
    P = equivariant_projection(m.psi, W)
    Pt = average_equivariant_projection(P, m, m, t)
    K = kernel(Pt)
    out = []
    for U in (W, K):
        sub = HLModule(m.algebra, _restrict_rep(m.psi, U), m.struct_L,
                       m.struct_V.restrict(U) if m.struct_V is not None else None)
        inc = U.inclusion()
        out.extend(p.image(inc) for p in _weyl(sub, t))
    return out


# -- S complement and the full pipeline ------------------------------------------------------

def radical_complement(L: LieAlgebra, B: Subspace, R: Subspace, N: Subspace,
                       structure: Structure | None = None,
                       route: AveragingRoute | None = None) -> Subspace:
    """Invariant S with ``R = S + N`` and ``[B, S] = 0``."""
    if N == R:
        return L.zero()
    NR = Subspace([R.coordinates(v) for v in N.rows], R.dim)
    psi = [Matrix.from_columns([R.coordinates(L.bracket(b, v)) for v in R.rows], R.dim)
           for b in B.rows]
    P = equivariant_projection(psi, NR)
    if structure is not None:
        route = _route(structure, route)
        side = _side(route)
        if B.dim:
            subB = subalgebra(L, B)
            mod = HLModule(subB.algebra, psi, side.restrict(B), side.restrict(R))
            validate_hlmodule(mod)
            P = average_equivariant_projection(P, mod, mod, route.integral)
        else:
            sR = side.restrict(R)
            P = average(P, sR, sR, route.integral)
            if P @ P != P or Subspace.from_columns(P) != NR:
                raise InternalInconsistency("averaged projection onto N is not a projection onto N")
    S = kernel(P).image(R.inclusion())
    if bracket_span(L, B, S).dim:
        raise InternalInconsistency("[B, S] != 0")
    if S.dim + N.dim != R.dim or (S & N).dim:
        raise InternalInconsistency("R != S + N")
    if not is_invariant(structure, S):
        raise InternalInconsistency("S is not invariant")
    return S


@dataclass
class LeviDecomposition:
    B: Subspace
    R: Subspace
    S: Subspace
    N: Subspace
    components: list
    report: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.report)


def _stage(name: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except LevikitError as e:
        if e.stage is None:
            e.stage = name
        raise


def full_decomposition(L: LieAlgebra, structure: Structure | None = None) -> LeviDecomposition:
    """``L = B + S + N`` with B split into H-simple components."""
    _stage("validate", validate_structure, L, structure)
    R = _stage("radical", solvable_radical, L)
    N = _stage("nilradical", nilradical, L)
    if structure is not None:
        def stability():
            from .action import radical_stability_report

            rep = radical_stability_report(L, structure)
            if not rep.R_invariant:
                raise RadicalNotInvariant("the solvable radical is not invariant under the structure")
            if not rep.N_invariant:
                raise RadicalNotInvariant("the nilradical is not invariant under the structure")
            return rep
        _stage("stability", stability)
    needs_route = 0 < R.dim < L.dim or N != R
    route = _stage("route", averaging_route, structure) if needs_route else None
    lev = _stage("levi", levi_decompose, L, structure, route)
    comps = _stage("split", semisimple_split, L, lev.B, structure)
    S = _stage("complement", radical_complement, L, lev.B, R, N, structure, route)
    d = LeviDecomposition(lev.B, R, S, N, comps)
    d.report = verify_decomposition(L, structure, d)
    if not d.passed:
        failed = [c for c, ok in d.report if not ok]
        err = InternalInconsistency(f"decomposition failed verification: {', '.join(failed)}")
        err.stage = "verify"
        raise err
    return d


def verify_decomposition(L: LieAlgebra, structure: Structure | None, d: LeviDecomposition) -> list:
    """Independent re-check of every clause; returns ``[(check, passed), ...]``."""
    B, R, S, N, comps = d.B, d.R, d.S, d.N, d.components
    rep = []

    def add(name, fn):
        try:
            ok = bool(fn())
        except LevikitError:
            ok = False
        rep.append((name, ok))

    add("R is the solvable radical", lambda: R == solvable_radical(L, check=False))
    add("N is the nilradical", lambda: N == nilradical(L, check=False))
    add("B is a subalgebra", lambda: is_subalgebra(L, B))
    add("B + R = L is direct", lambda: B.dim + R.dim == L.dim and (B & R).dim == 0)
    add("Killing form of B is nondegenerate",
        lambda: B.dim == 0 or killing_nondegenerate(subalgebra(L, B).algebra))
    add("R is a solvable ideal", lambda: is_ideal(L, R) and is_solvable(L, R))
    add("N is a nilpotent ideal", lambda: is_ideal(L, N) and is_nilpotent(L, N))
    add("R = S + N is direct", lambda: S.dim + N.dim == R.dim and (S & N).dim == 0 and (S + N) == R)
    add("[B, S] = 0", lambda: bracket_span(L, B, S).dim == 0)
    add("[L, R] in N", lambda: bracket_span(L, L.whole(), R) <= N)

    def comps_ok():
        total = Subspace([], L.dim)
        for c in comps:
            total = total + c
        return total == B and sum(c.dim for c in comps) == B.dim

    add("components sum directly to B", comps_ok)
    add("components are ideals of B", lambda: all(bracket_span(L, B, c) <= c for c in comps))
    add("components commute", lambda: all(bracket_span(L, a, b).dim == 0 for a, b in combinations(comps, 2)))
    if structure is not None:
        for name, sp in (("B", B), ("R", R), ("S", S), ("N", N)):
            add(f"{name} is invariant", lambda sp=sp: is_invariant(structure, sp))
        add("components are invariant", lambda: all(is_invariant(structure, c) for c in comps))
    return rep


# -- cyclic obstruction ---------------------------------------------------------------------

@dataclass(frozen=True)
class ObstructionCertificate:
    """``image(phi - id)`` and ``Fix(phi)`` both lie in R, so no invariant B with
    ``B & R = 0`` can be nonzero."""
    R: Subspace
    image: Subspace
    fixed: Subspace
    image_in_R: bool
    fixed_in_R: bool

    @property
    def image_equals_R(self) -> bool:
        return self.image == self.R

    @property
    def fixed_equals_R(self) -> bool:
        return self.fixed == self.R


@dataclass(frozen=True)
class NoObstruction:
    """The sufficient condition fails; existence of an invariant Levi subalgebra is not decided."""
    reason: str
    image: Subspace
    fixed: Subspace


def automorphism_levi_obstruction(L: LieAlgebra, action: CyclicAction):
    validate_automorphism(L, action)
    R = solvable_radical(L)
    D = action.phi - Matrix.identity(L.dim)
    image = Subspace.from_columns(D)
    fixed = kernel(D)
    if R == L.whole():
        return NoObstruction("L is solvable, so B = 0 is an invariant Levi subalgebra", image, fixed)
    if not image <= R:
        return NoObstruction("image(phi - id) is not inside R", image, fixed)
    if not fixed <= R:
        return NoObstruction("Fix(phi) is not inside R", image, fixed)
    return ObstructionCertificate(R, image, fixed, True, True)
