"""Integral averaging: turning linear maps into colinear / graded maps."""

from __future__ import annotations

from .action import ComoduleStructure, Grading, HLModule
from .errors import (
    DimensionMismatch,
    GroupMismatch,
    IntegralNotAdInvariant,
    IntegralNotNormalized,
    InternalInconsistency,
    NotLEquivariant,
)
from .exactmat import ZERO, Matrix, Subspace
from .hopf import Integral

EquivSide = Grading | ComoduleStructure | None


def _check_shapes(r: Matrix, dV: int, dW: int):
    if r.shape != (dW, dV):
        raise DimensionMismatch(f"map has shape {r.shape}, expected {(dW, dV)}")


def averaging_coefficients(c: ComoduleStructure, t: Integral) -> list[list]:
    """``coef[p][k] = t(h_p S(h_k))``."""
    h = c.hopf
    Scols = h.antipode.columns()
    return [[t(h.multiply(h.basis_vector(p), Scols[k])) for k in range(h.dim)] for p in range(h.dim)]


def is_colinear(r: Matrix, cV: ComoduleStructure, cW: ComoduleStructure) -> bool:
    return all(TW @ r == r @ TV for TV, TW in zip(cV.ops, cW.ops))


def average_colinear(r: Matrix, cV: ComoduleStructure, cW: ComoduleStructure, t: Integral,
                     pi: Matrix | None = None) -> Matrix:
    """``r~(x) = t(r(x_(0))_(1) S(x_(1))) r(x_(0))_(0)``.

    As matrices: ``r~ = sum_{p,k} t(h_p S(h_k)) T^W_p r T^V_k``. If a colinear
    ``pi`` with ``pi r = id`` is supplied, ``pi r~ = id`` is checked as well.
    """
    if cV.hopf != cW.hopf:
        raise DimensionMismatch("comodules over different Hopf algebras")
    _check_shapes(r, cV.dim, cW.dim)
    if pi is not None and not t.normalized:
        raise IntegralNotNormalized("section preservation needs t(1) = 1")
    coef = averaging_coefficients(cV, t)
    m = cV.hopf.dim
    out = Matrix.zeros(cW.dim, cV.dim)
    for k in range(m):
        col = [coef[p][k] for p in range(m)]
        if not any(col):
            continue
        rT = r @ cV.ops[k]
        if rT.is_zero():
            continue
        for p in range(m):
            if col[p]:
                out = out + (cW.ops[p] @ rT) * col[p]
    if not is_colinear(out, cV, cW):
        raise InternalInconsistency("averaged map is not colinear")
    if pi is not None and pi @ r == Matrix.identity(cV.dim):
        if pi @ out != Matrix.identity(cV.dim):
            raise InternalInconsistency("averaging did not preserve the section property")
    return out


def _same_group(gV: Grading, gW: Grading):
    if gV.group != gW.group:
        raise GroupMismatch("gradings use different groups")


def is_graded_map(r: Matrix, gV: Grading, gW: Grading) -> bool:
    _same_group(gV, gW)
    return all(not x or gW.degrees[i] == gV.degrees[j]
               for i, row in enumerate(r.rows) for j, x in enumerate(row))


def average_graded(r: Matrix, gV: Grading, gW: Grading) -> Matrix:
    """``sum_g p_{W,g} r p_{V,g}``: keep only the degree-preserving entries."""
    _same_group(gV, gW)
    _check_shapes(r, gV.dim, gW.dim)
    dV = gV.degrees
    rows = tuple(tuple(x if x and gW.degrees[i] == dV[j] else ZERO for j, x in enumerate(row))
                 for i, row in enumerate(r.rows))
    return Matrix._raw(rows, r.ncols)


def is_equivariant_map(r: Matrix, sV: EquivSide, sW: EquivSide) -> bool:
    if sV is None:
        return True
    if isinstance(sV, Grading):
        return is_graded_map(r, sV, sW)
    return is_colinear(r, sV, sW)


def average(r: Matrix, sV: EquivSide, sW: EquivSide, t: Integral | None = None,
            pi: Matrix | None = None) -> Matrix:
    """Average with whichever route the structures call for."""
    if sV is None and sW is None:
        return r
    if isinstance(sV, Grading) and isinstance(sW, Grading):
        out = average_graded(r, sV, sW)
        if pi is not None and pi @ r == Matrix.identity(sV.dim) and pi @ out != Matrix.identity(sV.dim):
            raise InternalInconsistency("graded averaging did not preserve the section property")
        return out
    if isinstance(sV, ComoduleStructure) and isinstance(sW, ComoduleStructure):
        if t is None:
            raise ValueError("comodule averaging needs an integral")
        return average_colinear(r, sV, sW, t, pi)
    raise TypeError("source and target structures must be of the same kind")


def is_module_hom(pi: Matrix, mV: HLModule, mW: HLModule) -> bool:
    return all(pi @ a == b @ pi for a, b in zip(mV.psi, mW.psi))


def average_equivariant_projection(pi: Matrix, mV: HLModule, mW: HLModule,
                                   t: Integral | None = None) -> Matrix:
    """Average an L-module homomorphism into one that is also colinear.

    With an ad-invariant integral the result still commutes with the L-action.
    When ``pi`` is a projection of V onto a subspace (V = W) and t(1) = 1, the
    result is a projection onto the same subspace.
    """
    if not is_module_hom(pi, mV, mW):
        raise NotLEquivariant("input map does not commute with the L-action")
    if isinstance(mV.struct_V, ComoduleStructure):
        if t is None or not t.ad_invariant:
            raise IntegralNotAdInvariant("equivariant averaging needs an ad-invariant integral")
    out = average(pi, mV.struct_V, mW.struct_V, t)
    if not is_module_hom(out, mV, mW):
        raise InternalInconsistency("averaged map is not an L-module homomorphism")
    if not is_equivariant_map(out, mV.struct_V, mW.struct_V):
        raise InternalInconsistency("averaged map is not colinear")
    if pi.nrows == pi.ncols and pi @ pi == pi and (t is None or t.normalized):
        if out @ out != out:
            raise InternalInconsistency("averaged projection is not idempotent")
        if Subspace.from_columns(out) != Subspace.from_columns(pi):
            raise InternalInconsistency("averaged projection has a different image")
    return out
