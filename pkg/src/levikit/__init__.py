"""Exact structure decompositions of Lie algebras with gradings and Hopf (co)actions."""

from .action import (
    ComoduleStructure,
    CyclicAction,
    Grading,
    HLModule,
    ModuleStructure,
    adjoint_module,
    averaging_route,
    comodule_of_module,
    grading_to_comodule,
    invariant_hull,
    is_invariant,
    make_grading,
    module_of_comodule,
    radical_stability_report,
    validate_action,
    validate_automorphism,
    validate_coaction,
    validate_grading,
    validate_hlmodule,
)
from .cohomology import Cochain, coboundary, solve_coboundary
from .errors import HypothesisFailure, InputError, InternalInconsistency, LevikitError, ValidationFailure
from .exactmat import Matrix, Q, Subspace
from .groups import cyclic_group, finite_group, free_abelian, symmetric_group3
from .hopf import HopfAlgebra, dual_hopf, find_normalized_integral, group_algebra, sweedler4, validate_hopf
from .levi import (
    automorphism_levi_obstruction,
    full_decomposition,
    levi_decompose,
    radical_complement,
    semisimple_split,
    simple_ideals,
    verify_decomposition,
    weyl_decompose,
)
from .liealg import (
    LieAlgebra,
    from_brackets,
    from_matrices,
    killing_form,
    nilradical,
    solvable_radical,
    validate_lie,
)
from .maschke import average, average_colinear, average_graded

__all__ = [
    "Cochain",
    "ComoduleStructure",
    "CyclicAction",
    "Grading",
    "HLModule",
    "HopfAlgebra",
    "HypothesisFailure",
    "InputError",
    "InternalInconsistency",
    "LevikitError",
    "LieAlgebra",
    "Matrix",
    "ModuleStructure",
    "Q",
    "Subspace",
    "ValidationFailure",
    "adjoint_module",
    "automorphism_levi_obstruction",
    "average",
    "average_colinear",
    "average_graded",
    "averaging_route",
    "coboundary",
    "comodule_of_module",
    "cyclic_group",
    "dual_hopf",
    "find_normalized_integral",
    "finite_group",
    "free_abelian",
    "from_brackets",
    "from_matrices",
    "full_decomposition",
    "grading_to_comodule",
    "group_algebra",
    "invariant_hull",
    "is_invariant",
    "killing_form",
    "levi_decompose",
    "make_grading",
    "module_of_comodule",
    "nilradical",
    "radical_complement",
    "radical_stability_report",
    "semisimple_split",
    "simple_ideals",
    "solvable_radical",
    "solve_coboundary",
    "sweedler4",
    "symmetric_group3",
    "validate_action",
    "validate_automorphism",
    "validate_coaction",
    "validate_grading",
    "validate_hlmodule",
    "validate_hopf",
    "validate_lie",
    "verify_decomposition",
    "weyl_decompose",
]

__version__ = "0.1.0"
