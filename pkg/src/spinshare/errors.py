"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside an operation's mathematical domain."""


class ValidityError(ValueError):
    """High-temperature expansion produced a negative eigenvalue."""


class ConcentrationError(DomainError):
    """Closed forms cover sharing (k >= p) only; use the spectral path for k < p."""


class ThresholdUnreachableError(DomainError):
    """No polarization level in [0, 1] reaches the requested border."""


class ResourceError(ValueError):
    """Dense-oracle size cap exceeded."""


class ConsistencyError(RuntimeError):
    """An internal cross-check that should be impossible to violate failed."""
