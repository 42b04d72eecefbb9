"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line with its timing so a
plain ``pytest -v`` run doubles as the acceptance report.
"""

import io as _io
import random
import time

import pytest

from conftest import FIXTURES
from randgen import colinear_cocycle_basis, graded_semisimple_cases, random_combination, random_matrix, random_pair
from levikit import catalog, io
from levikit.action import radical_stability_report, validate_action
from levikit.cli import run
from levikit.cohomology import coboundary0, coboundary1, coboundary2, is_colinear_cochain, solve_coboundary
from levikit.construct import random_instance
from levikit.errors import NormalizationImpossible
from levikit.exactmat import Matrix, Subspace
from levikit.groups import symmetric_group3
from levikit.hopf import find_normalized_integral, group_algebra, is_ad_invariant, is_left_integral, sweedler4
from levikit.levi import (
    ObstructionCertificate,
    automorphism_levi_obstruction,
    full_decomposition,
    levi_decompose,
    semisimple_split,
    verify_decomposition,
)
from levikit.liealg import bracket_span, is_subalgebra, killing_nondegenerate, solvable_radical, subalgebra
from levikit.maschke import average_colinear, is_colinear


@pytest.fixture
def report(capsys):
    def emit(n, ok, secs, limit=None, detail=""):
        within = limit is None or secs < limit
        status = "PASS" if ok and within else "FAIL"
        bound = f" (limit {limit:g} s)" if limit is not None else ""
        with capsys.disabled():
            print(f"\ncriterion {n}: {status}  {secs:.2f} s{bound}  {detail}".rstrip())
        assert ok, detail
        assert within, f"took {secs:.2f} s, limit {limit} s"
    return emit


def _cli(*argv):
    out, err = _io.StringIO(), _io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def _homogeneous(grading, W: Subspace) -> bool:
    # W is graded iff it is the sum of its intersections with the homogeneous components
    return sum((W & grading.component(g)).dim for g in grading.support) == W.dim


def _is_levi(L, B, R) -> bool:
    return (is_subalgebra(L, B) and B.dim + R.dim == L.dim and (B & R).dim == 0
            and (B.dim == 0 or killing_nondegenerate(subalgebra(L, B).algebra)))


def test_criterion_1_s3_graded_example(report):
    t0 = time.perf_counter()
    L, g = catalog.s3_block()
    d = full_decomposition(L, g)
    checks = verify_decomposition(L, g, d)
    ok = (d.B.dim == 6 and d.R.dim == 2 and d.N == d.R and d.S.dim == 0
          and all(_homogeneous(g, W) for W in (d.B, d.R, d.N, *d.components))
          and all(passed for _, passed in checks))
    code, out, _ = _cli("decompose", FIXTURES / "s3_block.alg", "--grading", FIXTURES / "s3.grading")
    ok = ok and code == 0 and "B: dim 6" in out and "homogeneous: yes" in out
    report(1, ok, time.perf_counter() - t0, 1.0, f"dim B={d.B.dim}, R={d.R.dim}, N={d.N.dim}, S={d.S.dim}")


def test_criterion_2_sweedler_counterexample(report):
    t0 = time.perf_counter()
    L, act = catalog.l6_sweedler()
    validate_action(L, act)
    rep = radical_stability_report(L, act)
    code, _, err = _cli("levi", FIXTURES / "l6.alg", "--module", FIXTURES / "sweedler_action.act",
                        "--hopf", FIXTURES / "h4.hopf")
    ok = rep.R_invariant is False and code == 2 and "RadicalNotInvariant" in err
    report(2, ok, time.perf_counter() - t0, 1.0, f"R_invariant={rep.R_invariant}, exit={code}")


def test_criterion_3_integrals(report):
    t0 = time.perf_counter()
    try:
        find_normalized_integral(sweedler4())
        h4_ok, space_dim = False, None
    except NormalizationImpossible as e:
        space_dim = e.details.get("integral_space_dim")
        h4_ok = space_dim == 1
    H, _ = group_algebra(symmetric_group3())
    t = find_normalized_integral(H)
    indicator = tuple(1 if i == symmetric_group3().identity else 0 for i in range(6))
    fg_ok = (t.t == indicator and t.normalized and t.ad_invariant
             and is_left_integral(H, t.t) and is_ad_invariant(H, t.t))
    code = _cli("integral", FIXTURES / "h4.hopf")[0]
    report(3, h4_ok and fg_ok and code == 2, time.perf_counter() - t0, 1.0,
           f"H4 integral space dim={space_dim}, S3 integral={[str(x) for x in t.t]}")


def test_criterion_4_no_invariant_levi(report):
    t0 = time.perf_counter()
    L, phi = catalog.block_automorphism(2)
    cert = automorphism_levi_obstruction(L, phi)
    R = solvable_radical(L)
    is_cert = isinstance(cert, ObstructionCertificate)
    image_eq = is_cert and cert.image == R
    fixed_eq = is_cert and cert.fixed == R
    detail = (f"dim L={L.dim}, dim R={R.dim}, dim image(phi-id)={cert.image.dim}, "
              f"dim Fix(phi)={cert.fixed.dim}, image=R: {image_eq}, Fix=R: {fixed_eq}")
    report(4, L.dim == 7 and image_eq and fixed_eq, time.perf_counter() - t0, 1.0, detail)


def test_criterion_5_random_levi_suite(report):
    t0 = time.perf_counter()
    failures = []
    for seed in range(200):
        inst = random_instance(seed)
        L = inst.algebra
        res = levi_decompose(L)
        if not (L.dim <= 12 and res.B.dim == inst.b0_dim and res.R == inst.r0 and _is_levi(L, res.B, res.R)):
            failures.append(seed)
    report(5, not failures, time.perf_counter() - t0, 60.0, f"200 instances, failures={failures}")


def test_criterion_6_graded_levi_suite(report):
    t0 = time.perf_counter()
    failures, total = [], 0
    for group in ("Z2", "S3", "Z"):
        for seed in range(70):
            inst = random_instance(1000 + seed, group=group)
            L, g = inst.algebra, inst.grading
            res = levi_decompose(L, g)
            total += 1
            if not (_is_levi(L, res.B, res.R) and res.B.dim == inst.b0_dim and _homogeneous(g, res.B)):
                failures.append((group, seed))
    report(6, not failures, time.perf_counter() - t0, 60.0,
           f"{total} graded instances, homogeneous {total - len(failures)}/{total}")


def test_criterion_7_maschke_properties(report):
    t0 = time.perf_counter()
    failures = []
    rng = random.Random(7)
    for k in range(100):
        cV, cW, pi, r, t = random_pair(rng)
        rt = average_colinear(r, cV, cW, t, pi)
        ok = (is_colinear(rt, cV, cW) and average_colinear(rt, cV, cW, t) == rt
              and pi @ rt == Matrix.identity(cV.dim))
        if not ok:
            failures.append(k)
    report(7, not failures, time.perf_counter() - t0, None, f"100 pairs, failures={failures}")


def test_criterion_8_cohomology(report):
    t0 = time.perf_counter()
    rng = random.Random(8)
    reps = [catalog.sl2(), catalog.l7(), catalog.gl2(), catalog.l6(), catalog.heisenberg()]
    d2_fail = []
    for k in range(100):
        L = reps[k % len(reps)] if k < 50 else random_instance(k).algebra
        psi = L.ad_basis
        omega = random_matrix(rng, L.dim, L.dim)
        v = tuple(rng.randint(-3, 3) for _ in range(L.dim))
        if not (coboundary2(L, psi, coboundary1(L, psi, omega)).is_zero()
                and coboundary1(L, psi, coboundary0(L, psi, v)).is_zero()):
            d2_fail.append(k)
    cases = graded_semisimple_cases()
    solved, colin_fail = 0, []
    for k in range(50):
        name, L, psi, sL, sV, t = cases[k % len(cases)]
        basis = colinear_cocycle_basis(L, psi, sL, sV)
        phi = random_combination(rng, basis)
        omega = solve_coboundary(L, psi, phi, colinear=True, struct_L=sL, struct_V=sV, t=t)
        if coboundary1(L, psi, omega) == phi and is_colinear_cochain(L, omega, sL, sV) \
                and is_colinear_cochain(L, phi, sL, sV):
            solved += 1
        else:
            colin_fail.append((k, name))
    report(8, not d2_fail and not colin_fail, time.perf_counter() - t0, None,
           f"d^2=0 failures={d2_fail}, colinear solves {solved}/50")


def test_criterion_9_h_simple_splitting(report):
    t0 = time.perf_counter()
    L = catalog.sl2_sum()
    plain = semisimple_split(L)
    Lg, g = catalog.sl2_swap_graded()
    graded = semisimple_split(Lg, None, g)
    resplit = all(semisimple_split(L, c) == [c] for c in plain) and \
        all(semisimple_split(Lg, c, g) == [c] for c in graded)
    ok = [c.dim for c in plain] == [3, 3] and [c.dim for c in graded] == [6] and resplit
    report(9, ok, time.perf_counter() - t0, 5.0,
           f"plain {[c.dim for c in plain]}, swap-graded {[c.dim for c in graded]}, re-split identity={resplit}")


def test_criterion_10_bsn_on_l7(report):
    t0 = time.perf_counter()
    L = catalog.l7()
    d = full_decomposition(L)

    def span(*names):
        return Subspace([tuple(1 if L.labels[i] == nm else 0 for i in range(L.dim)) for nm in names], L.dim)

    ok = (d.B == span("e", "h", "f") and d.S == span("t") and d.N == span("v1", "v2")
          and bracket_span(L, d.B, d.S).dim == 0
          and bracket_span(L, L.whole(), d.R) <= d.N
          and all(passed for _, passed in verify_decomposition(L, None, d)))
    report(10, ok, time.perf_counter() - t0, 1.0, f"dim B={d.B.dim}, S={d.S.dim}, N={d.N.dim}")
