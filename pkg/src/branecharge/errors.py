"""Exception hierarchy.

Every error names the precondition that failed.  The CLI maps subclasses of
:class:`InputError` to exit code 1, :class:`UnsupportedVariety` to exit code 2
and :class:`InternalError` to exit code 3.
"""


class BraneChargeError(Exception):
    pass


class InputError(BraneChargeError, ValueError):
    pass


class ParseError(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class NotFullDimensional(InputError):
    pass


class NonIntegerCoefficients(InputError):
    pass


class FaceNotOfThisPolytope(InputError):
    pass


class Unbounded(InputError):
    pass


class UnsupportedVariety(BraneChargeError):
    pass


class NotReflexive(UnsupportedVariety):
    pass


class NotSmooth(UnsupportedVariety):
    pass


class NotComplete(UnsupportedVariety):
    pass


class DimensionUnsupported(UnsupportedVariety):
    pass


class NotNef(UnsupportedVariety):
    pass


class InternalError(BraneChargeError, RuntimeError):
    pass


class InternalNonTermination(InternalError):
    pass
