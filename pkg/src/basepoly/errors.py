"""Exception hierarchy.

Everything raised deliberately by the library derives from ``BasePolyError``.
Input problems also derive from ``ValueError`` so callers can treat them the
usual way; internal consistency traps derive from ``AssertionError``-like
``ConsistencyError`` and indicate a bug, not bad input.
"""


class BasePolyError(Exception):
    """Root of all library errors."""


class InputError(BasePolyError, ValueError):
    """Invalid input to a library function."""


class ConsistencyError(BasePolyError):
    """Two independent computations disagreed. Always a bug."""


# matroids
class EmptyFamily(InputError):
    pass


class UnequalSizes(InputError):
    pass


class ExchangeAxiomViolated(InputError):
    def __init__(self, b1, b2, x, msg=None):
        self.b1, self.b2, self.x = b1, b2, x
        super().__init__(msg or f"exchange fails for B1={b1}, B2={b2}, x={x}")


class BadParameters(InputError):
    pass


class LabelCollision(InputError):
    pass


class ContractNonexistent(InputError):
    pass


class GroundSetTooLarge(InputError):
    pass


# faces and flags
class NotFactorConnected(InputError):
    pass


class NotAFace(InputError):
    pass


class NotABasis(InputError):
    pass


# posets and polynomials
class NotGraded(InputError):
    pass


class NotComparable(InputError):
    pass


class NotFaceLattice(InputError):
    pass


class NotEulerian(InputError):
    pass


class NotRepresentable(InputError):
    pass


class NotHomogeneous(InputError):
    pass


class RankMismatch(InputError):
    pass


class OddCoefficients(ConsistencyError):
    pass


class DefinitionMismatch(ConsistencyError):
    pass


# splits and rank 2
class InvalidSplitSpec(InputError):
    pass


class InvariantViolation(ConsistencyError):
    pass


class IdentityFailed(ConsistencyError):
    def __init__(self, report, msg=None):
        self.report = report
        super().__init__(msg or f"split identity failed: lhs={report.lhs} rhs={report.rhs}")


class IndexOutOfRange(InputError):
    pass


class BadM(InputError):
    pass
