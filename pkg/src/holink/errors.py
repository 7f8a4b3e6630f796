"""Exception types shared across the package."""


class HolinkError(Exception):
    """Base class for all package-specific errors."""


class DomainError(HolinkError, ValueError):
    """Input outside the mathematical domain (e.g. tau below the upper half-plane floor)."""


class PoleError(DomainError):
    """Evaluation requested at a pole (a lattice point)."""


class ConvergenceError(HolinkError, ArithmeticError):
    """A series failed to reach the requested truncation within the term cap."""


class HomologyError(HolinkError, ValueError):
    """Divisor fails the degree-zero requirement of the pairing."""


class DisjointnessError(HolinkError, ValueError):
    """Divisor supports overlap within the collision tolerance."""


class CurveMismatchError(HolinkError, ValueError):
    """Operands live on different curves."""


class CapabilityError(HolinkError, ValueError):
    """Requested map is outside the supported catalog."""


class BranchError(HolinkError, ValueError):
    """Pullback requested at a critical value of the map."""


class DivergenceError(HolinkError, ArithmeticError):
    """Value is -inf because the modulus inside a logarithm vanished."""


class ActionValidationError(HolinkError, ValueError):
    """Group action data is malformed."""


class InternalError(HolinkError, RuntimeError):
    """A pinned internal identity failed; indicates a bug, not bad input."""
