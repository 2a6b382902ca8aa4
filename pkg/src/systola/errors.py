"""Exception types shared across the package."""


class SystolaError(Exception):
    """Base class for all systola errors."""


class MalformedFaceError(SystolaError, ValueError):
    """A face repeats a vertex or is empty."""


class UnknownVertexError(SystolaError, ValueError):
    """A vertex label does not belong to the complex at hand."""


class DimensionError(SystolaError, ValueError):
    """A dimension or degree argument is out of range."""


class DomainError(SystolaError, ValueError):
    """A cochain value sits on a cell outside its legal domain."""


class CocycleError(SystolaError, ValueError):
    """A cochain required to be a cocycle is not one."""


class QuotientError(SystolaError, ValueError):
    """An antipodal identification would not produce a simplicial complex."""


class CapacityError(SystolaError, ValueError):
    """An exhaustive search was requested beyond its feasible input size."""


class ParameterError(SystolaError, ValueError):
    """An argument falls outside the documented parameter range."""
