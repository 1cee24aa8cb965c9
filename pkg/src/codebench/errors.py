"""Exception hierarchy for the workbench."""


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class NotPrime(WorkbenchError):
    pass


class BudgetExceeded(WorkbenchError):
    """An enumeration or table would exceed the configured budget."""


class SpecMismatch(WorkbenchError):
    """Operands belong to different field constructions."""


class DivisionByZero(WorkbenchError, ZeroDivisionError):
    pass


class NotSquareField(WorkbenchError):
    pass


class NotInSubfield(WorkbenchError):
    pass


class NotCoprime(WorkbenchError):
    pass


class NotPrimitiveRoot(WorkbenchError):
    pass


class DegenerateDimension(WorkbenchError):
    """The dual of the requested code does not have dimension 4."""


class NonIntegerResult(WorkbenchError):
    """A transform produced a non-integer count; the input was inconsistent."""


class FourWeightViolation(WorkbenchError):
    pass


class ValueSetViolation(WorkbenchError):
    """A solution count fell outside its proven value set."""


class MultiplicityNotQMinus1(WorkbenchError):
    """A weight-k support is carried by non-proportional codewords."""


class NotRegular(WorkbenchError):
    """Block multiset is not a t-design; carries a witness t-subset."""

    def __init__(self, subset, count, expected):
        self.subset = tuple(subset)
        self.count = count
        self.expected = expected
        super().__init__(
            f"t-subset {self.subset} lies in {count} blocks, expected {expected}"
        )


class NotFullCase(WorkbenchError):
    pass


class NoDelta(WorkbenchError):
    pass


class InvalidParameters(WorkbenchError):
    pass


class NotApplicable(WorkbenchError):
    pass
