"""Exception hierarchy.

Every error carries ``indices``: the basis indices of the identity that failed,
when there is one. The CLI maps the three top-level families to exit codes.
"""

from __future__ import annotations


class LevikitError(Exception):
    exit_code = 1

    def __init__(self, message: str = "", indices: tuple = (), **details):
        super().__init__(message)
        self.indices = tuple(indices)
        self.details = details
        self.stage: str | None = None

    @property
    def kind(self) -> str:
        return type(self).__name__


# -- input validation (exit 1) ------------------------------------------------

class ValidationFailure(LevikitError):
    exit_code = 1


class DimensionMismatch(ValidationFailure):
    pass


class AntisymmetryViolation(ValidationFailure):
    pass


class JacobiViolation(ValidationFailure):
    pass


class HopfAxiomFailure(ValidationFailure):
    pass


class AssociativityFailure(HopfAxiomFailure):
    pass


class UnitFailure(HopfAxiomFailure):
    pass


class CoassociativityFailure(HopfAxiomFailure):
    pass


class CounitFailure(HopfAxiomFailure):
    pass


class BialgebraFailure(HopfAxiomFailure):
    pass


class AntipodeAxiomFailure(HopfAxiomFailure):
    pass


class NotAGroup(ValidationFailure):
    pass


class GroupMismatch(ValidationFailure):
    pass


class GradingFailure(ValidationFailure):
    pass


class CoactionFailure(ValidationFailure):
    pass


class ActionFailure(ValidationFailure):
    pass


class RepresentationFailure(ValidationFailure):
    pass


class HLModuleFailure(ValidationFailure):
    pass


class NotAnAutomorphism(ValidationFailure):
    pass


class NotAnIdeal(ValidationFailure):
    pass


class NotACocycle(ValidationFailure):
    pass


class NotSemisimple(ValidationFailure):
    pass


class NotLEquivariant(ValidationFailure):
    pass


class InfiniteGroup(ValidationFailure):
    pass


class DimensionCapExceeded(ValidationFailure):
    pass


# -- theorem hypotheses that do not hold (exit 2) ----------------------------

class HypothesisFailure(LevikitError):
    exit_code = 2


class RadicalNotInvariant(HypothesisFailure):
    pass


class NoIntegral(HypothesisFailure):
    pass


class NormalizationImpossible(HypothesisFailure):
    pass


class NoAveragingRoute(HypothesisFailure):
    pass


class SymmetryRequired(HypothesisFailure):
    pass


class IntegralUnavailable(HypothesisFailure):
    pass


class IntegralNotNormalized(HypothesisFailure):
    pass


class IntegralNotAdInvariant(HypothesisFailure):
    pass


class NotCompletelyReducible(HypothesisFailure):
    pass


class NoSolution(HypothesisFailure):
    """A linear system has no solution (e.g. a 2-cocycle that is not a coboundary)."""


class SplittingUndecided(HypothesisFailure):
    """Bounded search found neither a proper submodule nor an irreducibility certificate."""


# -- bugs ----------------------------------------------------------------------

class InternalInconsistency(LevikitError):
    """A theorem's hypotheses held but its conclusion failed: a bug."""
    exit_code = 1


# -- I/O (exit 3) --------------------------------------------------------------

class InputError(LevikitError):
    exit_code = 3
