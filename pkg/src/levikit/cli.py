"""Command-line entry point.

Every command builds a JSON-compatible result dict; ``--format text`` renders
that dict for humans, ``--format structured`` prints it verbatim.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .action import (
    ComoduleStructure,
    CyclicAction,
    Grading,
    HLModule,
    ModuleStructure,
    adjoint_module,
    comodule_of_module,
    radical_stability_report,
    validate_hlmodule,
)
from .cohomology import solve_coboundary
from .errors import InputError, LevikitError
from .exactmat import Subspace, qstr
from .hopf import dual_hopf, find_normalized_integral, group_algebra, sweedler4, validate_hopf
from .levi import (
    NoObstruction,
    automorphism_levi_obstruction,
    full_decomposition,
    levi_decompose,
    semisimple_split,
    weyl_decompose,
)
from .liealg import is_solvable, killing_nondegenerate, nilradical, solvable_radical

_KINDS = ("grading", "comodule", "module", "automorphism")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _add_io(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--output", metavar="FILE", help="also write the structured result to FILE")


def _add_structure(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    for k in _KINDS:
        g.add_argument(f"--{k}", metavar="FILE")
    p.add_argument("--hopf", metavar="FILE", help="Hopf algebra for --comodule/--module")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="levikit", description="Exact Levi-type decompositions of Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in (
        ("validate", "check the algebra, the structure and the Hopf axioms"),
        ("radical", "solvable radical"),
        ("nilradical", "nilpotent radical"),
        ("levi", "invariant Levi subalgebra"),
        ("decompose", "full B + S + N decomposition"),
        ("split", "H-simple components of the Levi subalgebra"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("algebra")
        _add_structure(p)
        _add_io(p)

    p = sub.add_parser("weyl", help="split a module into irreducible invariant submodules")
    p.add_argument("algebra")
    p.add_argument("--rep", metavar="FILE", help="module space (default: the adjoint module)")
    _add_structure(p)
    _add_io(p)

    p = sub.add_parser("integral", help="normalized ad-invariant left integral")
    p.add_argument("hopf")
    _add_io(p)

    p = sub.add_parser("obstruction", help="certificate that no invariant Levi subalgebra exists")
    p.add_argument("algebra")
    p.add_argument("--automorphism", metavar="FILE", required=True)
    _add_io(p)

    p = sub.add_parser("cohomology", help="cochain utilities")
    csub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = csub.add_parser("solve", help="solve d(omega) = phi for a 2-cocycle phi")
    q.add_argument("algebra")
    q.add_argument("--cochain", metavar="FILE", required=True)
    q.add_argument("--rep", metavar="FILE", help="module space (default: the adjoint module)")
    q.add_argument("--colinear", action="store_true")
    _add_structure(q)
    _add_io(q)

    p = sub.add_parser("hopf", help="build Hopf algebra files")
    hsub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = hsub.add_parser("build")
    q.add_argument("kind", choices=("group", "sweedler4"))
    q.add_argument("--table", metavar="FILE", help="group file for 'group'")
    _add_io(q)
    q = hsub.add_parser("dual")
    q.add_argument("hopf")
    _add_io(q)
    return parser


# -- loading ---------------------------------------------------------------------------

def _load_structure(args, L):
    hopf = io.load_hopf(args.hopf) if getattr(args, "hopf", None) else None
    for k in _KINDS:
        path = getattr(args, k, None)
        if path:
            return io.load_structure(L, k, path, hopf), hopf
    return None, hopf


def _kind(s) -> str | None:
    return {Grading: "grading", ComoduleStructure: "comodule", ModuleStructure: "module",
            CyclicAction: "automorphism"}.get(type(s))


def _hl_side(s):
    """Structure usable on an (H,L)-module: modules become comodules of the dual."""
    if isinstance(s, ModuleStructure):
        return comodule_of_module(None, s)
    return s


def _load_rep(path, L, side, module_struct: ModuleStructure | None) -> HLModule:
    d = io.read_json(path)
    if module_struct is not None and "act" in d:
        dv = d.get("dim")
        a = io.module_from_dict(d, dv if isinstance(dv, int) else 0, module_struct.hopf, path, str(path))
        d = dict(d)
        d["rho"] = io.comodule_to_dict(comodule_of_module(None, a))["rho"]
    return io.representation_from_dict(d, L, side, None, path, str(path))


def _sub(s: Subspace) -> dict:
    return {"dim": s.dim, "basis": io.subspace_out(s)}


# -- commands ----------------------------------------------------------------------------

def cmd_validate(args) -> dict:
    L = io.load_algebra(args.algebra)
    s, hopf = _load_structure(args, L)
    out = {"command": "validate", "algebra": {"dim": L.dim, "labels": list(L.labels),
                                              "solvable": is_solvable(L),
                                              "semisimple": L.dim > 0 and killing_nondegenerate(L)}}
    if hopf is not None:
        out["hopf"] = {"dim": hopf.dim, "valid": True}
    if s is not None:
        out["structure"] = {"kind": _kind(s), "valid": True}
    out["valid"] = True
    return out


def _stability(L, s) -> dict:
    rep = radical_stability_report(L, s)
    return {"R_invariant": rep.R_invariant, "N_invariant": rep.N_invariant, "guaranteed": rep.guaranteed}


def cmd_radical(args) -> dict:
    L = io.load_algebra(args.algebra)
    s, _ = _load_structure(args, L)
    out = {"command": "radical", "R": _sub(solvable_radical(L))}
    if s is not None:
        out["stability"] = _stability(L, s)
    return out


def cmd_nilradical(args) -> dict:
    L = io.load_algebra(args.algebra)
    s, _ = _load_structure(args, L)
    out = {"command": "nilradical", "N": _sub(nilradical(L))}
    if s is not None:
        out["stability"] = _stability(L, s)
    return out


def cmd_levi(args) -> dict:
    L = io.load_algebra(args.algebra)
    s, _ = _load_structure(args, L)
    res = levi_decompose(L, s)
    return {"command": "levi", "B": _sub(res.B), "R": _sub(res.R)}


def cmd_decompose(args) -> dict:
    L = io.load_algebra(args.algebra)
    s, _ = _load_structure(args, L)
    d = full_decomposition(L, s)
    out = {"command": "decompose", "dim": L.dim}
    if s is not None:
        out["structure"] = _kind(s)
    out.update({"B": _sub(d.B), "R": _sub(d.R), "S": _sub(d.S), "N": _sub(d.N),
                "components": [_sub(c) for c in d.components],
                "report": [{"check": c, "passed": ok} for c, ok in d.report],
                "passed": d.passed})
    if isinstance(s, Grading):
        out["homogeneous"] = all(s.degree_of(v) is not None
                                 for sp in (d.B, d.S, d.N, *d.components) for v in sp.rows)
    return out


def cmd_split(args) -> dict:
    L = io.load_algebra(args.algebra)
    s, _ = _load_structure(args, L)
    if L.dim and killing_nondegenerate(L):
        B = L.whole()
    else:
        B = levi_decompose(L, s).B
    comps = semisimple_split(L, B, s)
    return {"command": "split", "B": _sub(B), "components": [_sub(c) for c in comps]}


def cmd_weyl(args) -> dict:
    L = io.load_algebra(args.algebra)
    s, _ = _load_structure(args, L)
    if isinstance(s, CyclicAction):
        raise InputError("weyl supports --grading, --comodule or --module")
    side = _hl_side(s)
    m = _load_rep(args.rep, L, side, s if isinstance(s, ModuleStructure) else None) \
        if args.rep else adjoint_module(L, side)
    parts = weyl_decompose(m)
    return {"command": "weyl", "dim": m.space_dim, "components": [_sub(p) for p in parts]}


def cmd_integral(args) -> dict:
    h = io.load_hopf(args.hopf)
    t = find_normalized_integral(h)
    return {"command": "integral", "t": io.vec_out(t.t), "normalized": t.normalized,
            "ad_invariant": t.ad_invariant}


def cmd_obstruction(args) -> dict:
    L = io.load_algebra(args.algebra)
    a = io.load_structure(L, "automorphism", args.automorphism)
    res = automorphism_levi_obstruction(L, a)
    if isinstance(res, NoObstruction):
        return {"command": "obstruction", "obstructed": False, "reason": res.reason,
                "image": _sub(res.image), "fixed": _sub(res.fixed)}
    return {"command": "obstruction", "obstructed": True, "R": _sub(res.R),
            "image": _sub(res.image), "fixed": _sub(res.fixed),
            "image_equals_R": res.image_equals_R, "fixed_equals_R": res.fixed_equals_R}


def cmd_cohomology(args) -> dict:
    L = io.load_algebra(args.algebra)
    s, _ = _load_structure(args, L)
    if isinstance(s, CyclicAction):
        raise InputError("cohomology solve supports --grading, --comodule or --module")
    side = _hl_side(s)
    m = _load_rep(args.rep, L, side, s if isinstance(s, ModuleStructure) else None) \
        if args.rep else adjoint_module(L, side)
    validate_hlmodule(m)
    phi = io.cochain_from_dict(io.read_json(args.cochain), L.dim, args.cochain)
    if phi.dim_v != m.space_dim:
        raise InputError(f"{args.cochain}: dim_v {phi.dim_v} does not match the module dimension {m.space_dim}")
    if args.colinear and side is None:
        raise InputError("--colinear needs --grading, --comodule or --module")
    t = None
    if args.colinear and isinstance(side, ComoduleStructure):
        t = find_normalized_integral(side.hopf)
    omega = solve_coboundary(L, m.psi, phi, colinear=args.colinear, struct_L=m.struct_L,
                             struct_V=m.struct_V, t=t)
    return {"command": "cohomology solve", "colinear": args.colinear,
            "omega": [[qstr(x) for x in row] for row in omega.rows]}


def cmd_hopf(args) -> dict:
    if args.action == "dual":
        h = dual_hopf(io.load_hopf(args.hopf))
    elif args.kind == "sweedler4":
        h = sweedler4()
    else:
        if not args.table:
            raise InputError("hopf build group needs --table FILE")
        G = io.group_from_dict(io.read_json(args.table), args.table)
        if not hasattr(G, "order"):
            raise InputError("group algebras need a finite group table")
        h, _ = group_algebra(G)
    return io.hopf_to_dict(validate_hopf(h))


_COMMANDS = {
    "validate": cmd_validate,
    "radical": cmd_radical,
    "nilradical": cmd_nilradical,
    "levi": cmd_levi,
    "decompose": cmd_decompose,
    "split": cmd_split,
    "weyl": cmd_weyl,
    "integral": cmd_integral,
    "obstruction": cmd_obstruction,
    "cohomology": cmd_cohomology,
    "hopf": cmd_hopf,
}


# -- rendering ----------------------------------------------------------------------------

def _render_vector(v: list, labels: list | None) -> str:
    terms = []
    for i, x in enumerate(v):
        if x == "0":
            continue
        name = labels[i] if labels else f"e{i}"
        if x == "1":
            terms.append(f"+ {name}")
        elif x == "-1":
            terms.append(f"- {name}")
        elif x.startswith("-"):
            terms.append(f"- {x[1:]}*{name}")
        else:
            terms.append(f"+ {x}*{name}")
    if not terms:
        return "0"
    s = " ".join(terms)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def render_text(result: dict, labels: list | None = None) -> str:
    lines = []

    def emit(key, val, indent=""):
        if isinstance(val, dict) and set(val) == {"dim", "basis"}:
            lines.append(f"{indent}{key}: dim {val['dim']}")
            for v in val["basis"]:
                lines.append(f"{indent}  {_render_vector(v, labels)}")
        elif isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            for k, x in val.items():
                emit(k, x, indent + "  ")
        elif isinstance(val, list) and val and isinstance(val[0], dict) and "check" in val[0]:
            lines.append(f"{indent}{key}:")
            for r in val:
                lines.append(f"{indent}  [{'ok' if r['passed'] else 'FAIL'}] {r['check']}")
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{indent}{key}:")
            for i, x in enumerate(val):
                emit(f"[{i}]", x, indent + "  ")
        elif isinstance(val, bool):
            lines.append(f"{indent}{key}: {'yes' if val else 'no'}")
        elif isinstance(val, list):
            lines.append(f"{indent}{key}: {_json_inline(val)}")
        else:
            lines.append(f"{indent}{key}: {val}")

    for k, v in result.items():
        if k != "command":
            emit(k, v)
    return "\n".join(lines) + "\n"


def _json_inline(v) -> str:
    import json

    return json.dumps(v, separators=(", ", ": "))


def _labels_for(args) -> list | None:
    path = getattr(args, "algebra", None)
    if not path:
        return None
    try:
        d = io.read_json(path)
    except InputError:
        return None
    labels = d.get("labels") if isinstance(d, dict) else None
    return [str(x) for x in labels] if isinstance(labels, list) else None


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    fmt = "text"
    try:
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:  # --help
            return int(e.code or 0)
        fmt = args.format
        result = _COMMANDS[args.command](args)
        if args.output:
            io.write_json(result, args.output)
        if fmt == "structured" or args.command == "hopf":
            # built Hopf algebras are files, not reports
            stdout.write(io.write_json(result))
        else:
            stdout.write(render_text(result, _labels_for(args) if args.command != "weyl" or not args.rep else None))
        return 0
    except LevikitError as e:
        err = io.error_to_dict(e)
        if fmt == "structured":
            stdout.write(io.write_json(err))
        else:
            where = f" [{e.stage}]" if e.stage else ""
            idx = f" at {list(e.indices)}" if e.indices else ""
            stderr.write(f"levikit: {e.kind}{where}: {e}{idx}\n")
        return e.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
