"""Regenerate fixtures/ from the built-in catalog."""

import random
import sys
from pathlib import Path

from levikit import catalog, io
from levikit.action import HLModule
from levikit.cohomology import coboundary1
from levikit.exactmat import Matrix
from levikit.groups import cyclic_group, symmetric_group3
from levikit.hopf import group_algebra, sweedler4

OUT = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures")


def put(name, obj):
    io.write_json(obj, OUT / name)


def main():
    OUT.mkdir(exist_ok=True)
    for name, make in (("sl2", catalog.sl2), ("gl2", catalog.gl2), ("l_aff", catalog.l_aff),
                       ("heisenberg", catalog.heisenberg), ("l7", catalog.l7),
                       ("sl2_natural", catalog.sl2_natural), ("sl2_sum", catalog.sl2_sum),
                       ("l6", catalog.l6)):
        put(f"{name}.alg", io.algebra_to_dict(make()))

    L, g = catalog.s3_block()
    put("s3_block.alg", io.algebra_to_dict(L))
    put("s3.grading", io.grading_to_dict(g))
    put("s3.group", io.group_to_dict(symmetric_group3()))
    put("z2.group", io.group_to_dict(cyclic_group(2)))

    L, g = catalog.sl2_swap_graded()
    put("sl2_swap.alg", io.algebra_to_dict(L))
    put("sl2_swap.grading", io.grading_to_dict(g))
    _, phi = catalog.swap_automorphism()
    put("sl2_sum_swap.aut", io.automorphism_to_dict(phi))

    L, g = catalog.l_aff_graded()
    put("l_aff.grading", io.grading_to_dict(g))

    put("h4.hopf", io.hopf_to_dict(sweedler4()))
    put("s3.hopf", io.hopf_to_dict(group_algebra(symmetric_group3())[0]))
    put("z2.hopf", io.hopf_to_dict(group_algebra(cyclic_group(2))[0]))
    _, act = catalog.l6_sweedler()
    put("sweedler_action.act", io.module_to_dict(act, "h4.hopf"))
    _, act = catalog.l6_z2()
    put("l6_z2.act", io.module_to_dict(act, "z2.hopf"))

    L, phi = catalog.block_automorphism(2)
    put("block7.alg", io.algebra_to_dict(L))
    put("block7.aut", io.automorphism_to_dict(phi))

    # sl2 acting on natural + adjoint, and a coboundary to feed `cohomology solve`
    sl2 = catalog.sl2()
    nat = [[[0, 1], [0, 0]], [[1, 0], [0, -1]], [[0, 0], [1, 0]]]
    psi = []
    for i in range(3):
        m = [[0] * 5 for _ in range(5)]
        for a in range(2):
            for b in range(2):
                m[a][b] = nat[i][a][b]
        ad = sl2.ad_basis[i]
        for a in range(3):
            for b in range(3):
                m[2 + a][2 + b] = ad[a, b]
        psi.append(Matrix(m, 5))
    put("sl2_nat_adj.rep", io.representation_to_dict(HLModule(sl2, psi)))
    rng = random.Random(7)
    omega = Matrix([[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)], 3)
    put("sl2_adj.cochain", io.cochain_to_dict(coboundary1(sl2, sl2.ad_basis, omega)))


if __name__ == "__main__":
    main()
