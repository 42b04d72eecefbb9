"""JSON file formats.

Rationals are written as strings ``"p/q"`` or ``"p"``. Sparse tensors are
lists of ``[i, j, k, value]`` entries; dense matrices are lists of rows.
"""

from __future__ import annotations

import json
import os
from itertools import combinations
from pathlib import Path

from .action import (
    ComoduleStructure,
    CyclicAction,
    Grading,
    HLModule,
    ModuleStructure,
    make_grading,
    validate_automorphism,
    validate_coaction,
    validate_comodule,
    validate_grading,
    validate_action,
)
from .errors import DimensionCapExceeded, InputError, LevikitError, NotAGroup
from .exactmat import ZERO, Matrix, Q, Subspace, qstr
from .groups import FreeAbelianGroup, finite_group, free_abelian
from .hopf import HopfAlgebra, validate_hopf
from .liealg import LieAlgebra, validate_lie

DEFAULT_MAX_DIM = 64


def max_dim() -> int:
    raw = os.environ.get("LEVIKIT_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"LEVIKIT_MAX_DIM must be an integer, got {raw!r}") from None


def _cap(dim: int, what: str) -> None:
    cap = max_dim()
    if dim > cap:
        raise DimensionCapExceeded(f"{what} has dimension {dim}, above the cap {cap} (LEVIKIT_MAX_DIM)",
                                   dim=dim, cap=cap)


def read_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None


def _dumps(obj, indent: int = 0) -> str:
    """JSON with two-space indentation; lists of scalars stay on one line."""
    pad = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            return json.dumps(list(obj), ensure_ascii=False)
        items = [pad + _dumps(x, indent + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(obj, ensure_ascii=False)


def write_json(obj, path=None) -> str:
    text = _dumps(obj) + "\n"
    if path is not None:
        try:
            Path(path).write_text(text, encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot write {path}: {e.strerror}") from None
    return text


def _q(x, where: str):
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"{where}: rationals must be integers or strings 'p/q', got {x!r}")
    try:
        return Q(x)
    except (ValueError, TypeError, ZeroDivisionError):
        raise InputError(f"{where}: cannot parse {x!r} as a rational") from None


def _field(d: dict, key: str, where: str):
    if not isinstance(d, dict):
        raise InputError(f"{where}: expected an object")
    if key not in d:
        raise InputError(f"{where}: missing field {key!r}")
    return d[key]


def _index(x, bound: int, where: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < bound:
        raise InputError(f"{where}: index {x!r} out of range 0..{bound - 1}")
    return x


def _vector(v, n: int, where: str) -> tuple:
    if not isinstance(v, list) or len(v) != n:
        raise InputError(f"{where}: expected a list of {n} rationals")
    return tuple(_q(x, where) for x in v)


def _matrix(rows, nrows: int, ncols: int, where: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != nrows:
        raise InputError(f"{where}: expected {nrows} rows")
    return Matrix([_vector(r, ncols, where) for r in rows], ncols)


def _sparse3(entries, shape: tuple, where: str) -> list:
    a, b, c = shape
    t = [[[ZERO] * c for _ in range(b)] for _ in range(a)]
    if not isinstance(entries, list):
        raise InputError(f"{where}: expected a list of [i, j, k, value] entries")
    for e in entries:
        if not isinstance(e, list) or len(e) != 4:
            raise InputError(f"{where}: entry {e!r} is not [i, j, k, value]")
        i = _index(e[0], a, where)
        j = _index(e[1], b, where)
        k = _index(e[2], c, where)
        t[i][j][k] += _q(e[3], where)
    return t


def _dump_sparse3(t) -> list:
    out = []
    for i, plane in enumerate(t):
        for j, row in enumerate(plane):
            for k, x in enumerate(row):
                if x:
                    out.append([i, j, k, qstr(x)])
    return out


def vec_out(v) -> list:
    return [qstr(x) for x in v]


def matrix_out(m: Matrix) -> list:
    return [vec_out(r) for r in m.rows]


def subspace_out(s: Subspace) -> list:
    return [vec_out(r) for r in s.rows]


# -- algebras --------------------------------------------------------------------

def algebra_from_dict(d: dict, where: str = "algebra") -> LieAlgebra:
    n = _field(d, "dim", where)
    if not isinstance(n, int) or n < 0:
        raise InputError(f"{where}: dim must be a nonnegative integer")
    _cap(n, "algebra")
    labels = d.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise InputError(f"{where}: labels must list {n} names")
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for e in _field(d, "bracket", where):
        i = _index(_field(e, "i", where), n, where)
        j = _index(_field(e, "j", where), n, where)
        if i >= j:
            raise InputError(f"{where}: bracket entries must have i < j, got ({i}, {j})")
        coeffs = _field(e, "c", where)
        if not isinstance(coeffs, dict):
            raise InputError(f"{where}: 'c' must map basis indices to rationals")
        for k, x in coeffs.items():
            try:
                kk = int(k)
            except ValueError:
                raise InputError(f"{where}: bad basis index {k!r}") from None
            kk = _index(kk, n, where)
            v = _q(x, where)
            c[i][j][kk] += v
            c[j][i][kk] -= v
    return validate_lie(c, [str(x) for x in labels] if labels is not None else None)


def algebra_to_dict(L: LieAlgebra) -> dict:
    br = []
    for i, j in combinations(range(L.dim), 2):
        vals = {str(k): qstr(x) for k, x in enumerate(L.c[i][j]) if x}
        if vals:
            br.append({"i": i, "j": j, "c": vals})
    return {"dim": L.dim, "labels": list(L.labels), "bracket": br}


def load_algebra(path) -> LieAlgebra:
    return algebra_from_dict(read_json(path), str(path))


# -- Hopf algebras -----------------------------------------------------------------

def hopf_from_dict(d: dict, where: str = "hopf") -> HopfAlgebra:
    m = _field(d, "dim", where)
    if not isinstance(m, int) or m < 1:
        raise InputError(f"{where}: dim must be a positive integer")
    _cap(m, "Hopf algebra")
    mult = _sparse3(_field(d, "mult", where), (m, m, m), where)
    comult = _sparse3(_field(d, "comult", where), (m, m, m), where)
    unit = _vector(_field(d, "unit", where), m, where)
    counit = _vector(_field(d, "counit", where), m, where)
    S = _matrix(_field(d, "antipode", where), m, m, where)
    labels = d.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != m):
        raise InputError(f"{where}: labels must list {m} names")
    h = HopfAlgebra(mult, unit, comult, counit, S, [str(x) for x in labels] if labels else None)
    return validate_hopf(h)


def hopf_to_dict(h: HopfAlgebra) -> dict:
    return {
        "dim": h.dim,
        "labels": list(h.labels),
        "mult": _dump_sparse3(h.mult),
        "unit": vec_out(h.unit),
        "comult": _dump_sparse3(h.comult),
        "counit": vec_out(h.counit),
        "antipode": matrix_out(h.antipode),
    }


def load_hopf(path) -> HopfAlgebra:
    return hopf_from_dict(read_json(path), str(path))


# -- groups and gradings ----------------------------------------------------------------

def group_from_dict(d: dict, where: str = "group"):
    kind = _field(d, "kind", where)
    if kind == "finite_table":
        labels = _field(d, "labels", where)
        table = _field(d, "table", where)
        if not isinstance(labels, list) or not isinstance(table, list):
            raise InputError(f"{where}: labels and table must be lists")
        try:
            return finite_group(labels, table, d.get("identity"))
        except (TypeError, ValueError):
            raise InputError(f"{where}: malformed multiplication table") from None
    if kind == "free_abelian":
        rank = _field(d, "rank", where)
        if not isinstance(rank, int) or rank < 0:
            raise InputError(f"{where}: rank must be a nonnegative integer")
        return free_abelian(rank)
    raise InputError(f"{where}: unknown group kind {kind!r}")


def group_to_dict(G) -> dict:
    if isinstance(G, FreeAbelianGroup):
        return {"kind": "free_abelian", "rank": G.rank}
    return {"kind": "finite_table", "labels": list(G.labels),
            "table": [list(r) for r in G.table], "identity": G.identity}


def grading_from_dict(d: dict, n: int | None = None, where: str = "grading") -> Grading:
    G = group_from_dict(_field(d, "group", where), where)
    degrees = _field(d, "degrees", where)
    if not isinstance(degrees, list) or (n is not None and len(degrees) != n):
        raise InputError(f"{where}: degrees must list one group element per basis vector")
    try:
        return make_grading(G, degrees)
    except NotAGroup as e:
        raise InputError(f"{where}: {e}") from None
    except (TypeError, ValueError):
        raise InputError(f"{where}: malformed degree") from None


def grading_to_dict(g: Grading) -> dict:
    return {"group": group_to_dict(g.group), "degrees": g.labels()}


# -- coactions, actions, automorphisms ---------------------------------------------------------

def _hopf_for(d: dict, path, hopf: HopfAlgebra | None, where: str) -> HopfAlgebra:
    if hopf is not None:
        return hopf
    ref = d.get("hopf")
    if ref is None:
        raise InputError(f"{where}: no Hopf algebra given (use --hopf or a 'hopf' field)")
    if isinstance(ref, dict):
        return hopf_from_dict(ref, where)
    base = Path(path).parent if path is not None else Path(".")
    return load_hopf(base / ref)


def comodule_from_dict(d: dict, n: int, hopf: HopfAlgebra | None = None, path=None,
                       where: str = "comodule") -> ComoduleStructure:
    h = _hopf_for(d, path, hopf, where)
    rho = _sparse3(_field(d, "rho", where), (n, n, h.dim), where)
    return ComoduleStructure.from_rho(h, rho, n)


def comodule_to_dict(c: ComoduleStructure, hopf_ref=None) -> dict:
    out = {}
    if hopf_ref is not None:
        out["hopf"] = hopf_ref
    out["rho"] = _dump_sparse3(c.rho)
    return out


def module_from_dict(d: dict, n: int, hopf: HopfAlgebra | None = None, path=None,
                     where: str = "module") -> ModuleStructure:
    """``act`` entries ``[k, j, i, c]``: ``h_k . e_j`` has coefficient c along ``e_i``."""
    h = _hopf_for(d, path, hopf, where)
    t = _sparse3(_field(d, "act", where), (h.dim, n, n), where)
    act = [Matrix([[t[k][j][i] for j in range(n)] for i in range(n)], n) for k in range(h.dim)]
    return ModuleStructure(h, act)


def module_to_dict(a: ModuleStructure, hopf_ref=None) -> dict:
    n = a.dim
    t = [[[a.act[k][i, j] for i in range(n)] for j in range(n)] for k in range(a.hopf.dim)]
    out = {}
    if hopf_ref is not None:
        out["hopf"] = hopf_ref
    out["act"] = _dump_sparse3(t)
    return out


def automorphism_from_dict(d: dict, n: int, where: str = "automorphism") -> CyclicAction:
    """``phi`` is a dense matrix whose column j is the image of ``e_j``."""
    return CyclicAction(_matrix(_field(d, "phi", where), n, n, where))


def automorphism_to_dict(a: CyclicAction) -> dict:
    return {"phi": matrix_out(a.phi)}


def load_structure(L: LieAlgebra, kind: str, path, hopf: HopfAlgebra | None = None):
    """Load and validate one equivariant structure on L."""
    d = read_json(path)
    where = str(path)
    if kind == "grading":
        return validate_grading(L, grading_from_dict(d, L.dim, where))
    if kind == "comodule":
        return validate_coaction(L, comodule_from_dict(d, L.dim, hopf, path, where))
    if kind == "module":
        return validate_action(L, module_from_dict(d, L.dim, hopf, path, where))
    if kind == "automorphism":
        return validate_automorphism(L, automorphism_from_dict(d, L.dim, where))
    raise InputError(f"unknown structure kind {kind!r}")


# -- representations and cochains -----------------------------------------------------------------

def representation_from_dict(d: dict, L: LieAlgebra, struct_L=None, hopf: HopfAlgebra | None = None,
                             path=None, where: str = "representation") -> HLModule:
    """``{"dim": d, "psi": [[i, p, q, c], ...], "degrees"?: [...], "rho"?: [...]}``.

    ``psi(e_i)[p][q] = c``. Degrees use the group of the grading on L; ``rho``
    uses the Hopf algebra of the coaction on L.
    """
    dv = _field(d, "dim", where)
    if not isinstance(dv, int) or dv < 0:
        raise InputError(f"{where}: dim must be a nonnegative integer")
    _cap(dv, "module")
    t = _sparse3(_field(d, "psi", where), (L.dim, dv, dv), where)
    psi = [Matrix(t[i], dv) for i in range(L.dim)]
    struct_V = None
    if isinstance(struct_L, Grading):
        degs = _field(d, "degrees", where)
        if not isinstance(degs, list) or len(degs) != dv:
            raise InputError(f"{where}: degrees must list {dv} group elements")
        try:
            struct_V = make_grading(struct_L.group, degs)
        except NotAGroup as e:
            raise InputError(f"{where}: {e}") from None
    elif isinstance(struct_L, ComoduleStructure):
        rho = _sparse3(_field(d, "rho", where), (dv, dv, struct_L.hopf.dim), where)
        struct_V = validate_comodule(ComoduleStructure.from_rho(struct_L.hopf, rho, dv))
    return HLModule(L, psi, struct_L, struct_V)


def representation_to_dict(m: HLModule) -> dict:
    t = [[[x for x in row] for row in p.rows] for p in m.psi]
    out = {"dim": m.space_dim, "psi": _dump_sparse3(t)}
    if isinstance(m.struct_V, Grading):
        out["degrees"] = m.struct_V.labels()
    elif isinstance(m.struct_V, ComoduleStructure):
        out["rho"] = _dump_sparse3(m.struct_V.rho)
    return out


def cochain_from_dict(d: dict, n: int, where: str = "cochain"):
    """``{"dim_v": d, "values": [{"i": i, "j": j, "v": [...]}, ...]}`` on pairs i < j."""
    from .cohomology import Cochain

    dv = _field(d, "dim_v", where)
    if not isinstance(dv, int) or dv < 0:
        raise InputError(f"{where}: dim_v must be a nonnegative integer")
    vals = {}
    for e in _field(d, "values", where):
        i = _index(_field(e, "i", where), n, where)
        j = _index(_field(e, "j", where), n, where)
        if i >= j:
            raise InputError(f"{where}: cochain entries must have i < j")
        vals[(i, j)] = _vector(_field(e, "v", where), dv, where)
    return Cochain(n, dv, 2, vals)


def cochain_to_dict(c) -> dict:
    return {"dim_v": c.dim_v,
            "values": [{"i": i, "j": j, "v": vec_out(v)} for (i, j), v in sorted(c.values.items()) if any(v)]}


def error_to_dict(e: LevikitError) -> dict:
    out = {"error": e.kind, "message": str(e), "indices": _plain(list(e.indices)), "exit_code": e.exit_code}
    if e.stage is not None:
        out["stage"] = e.stage
    if e.details:
        out["details"] = {k: _plain(v) for k, v in sorted(e.details.items())}
    return out


def _plain(v):
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, Subspace):
        return subspace_out(v)
    if isinstance(v, Matrix):
        return matrix_out(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    try:
        return qstr(v)
    except (TypeError, ValueError):
        return repr(v)
