"""Exception types shared across the package."""


class ZcpnError(Exception):
    """Base class for all package errors."""


class ContextError(ZcpnError, ValueError):
    """Operands live in different rings, or a parameter is invalid for the ring."""


class ScopeError(ZcpnError, ValueError):
    """The requested (p, n) case is outside the supported range."""


class TrivialCaseError(ScopeError):
    """The unit group is just +-C_m; there is nothing to construct."""


class NotAUnitError(ZcpnError, ArithmeticError):
    """A negative power or inverse was requested for a non-unit."""


class StructuralError(ZcpnError, RuntimeError):
    """A computed invariant disagrees with what the construction requires."""


class PrecisionError(ZcpnError, RuntimeError):
    """Numerical verdicts at two working precisions disagree."""


class CapacityError(ZcpnError, ValueError):
    """An exhaustive enumeration would exceed the configured size limit."""
