"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class RegimeError(DomainError):
    """The shape parameter lies outside the regime required by the operation."""


class SingularFamilyError(DomainError):
    """The scanned family numerator vanishes inside the sampled interval."""


class ConvergenceError(RuntimeError):
    """A root search failed to bracket or converge; indicates an internal fault."""
