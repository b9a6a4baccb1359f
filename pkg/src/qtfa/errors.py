"""Exception hierarchy.

Every error carries a CLI exit code so the command-line front end can map
failures without inspecting messages: 2 for usage or precondition problems,
3 for numerical acceptance failures, 4 for a bad constants table.
"""


class QtfaError(Exception):
    exit_code = 2


class PreconditionError(QtfaError, ValueError):
    exit_code = 2


class NonDivisor(PreconditionError):
    pass


class EvenOrderUnsupported(PreconditionError):
    """Half-integer phases only exist exactly when 2 is invertible mod L."""


class Unhalvable(PreconditionError):
    pass


class ModelMismatch(PreconditionError):
    pass


class LatticeMismatch(PreconditionError):
    pass


class LatticeConditionViolated(PreconditionError):
    pass


class OffGridLattice(PreconditionError):
    pass


class NotAFrame(PreconditionError):
    pass


class ZeroSymbolAtOrigin(PreconditionError):
    pass


class NumericalError(QtfaError, ArithmeticError):
    exit_code = 3


class NotInvariant(NumericalError):
    pass


class SupportLeak(NumericalError):
    pass


class SupportViolation(NumericalError):
    pass


class InconsistentConstant(NumericalError):
    pass


class ConstantsMismatch(QtfaError, RuntimeError):
    exit_code = 4
