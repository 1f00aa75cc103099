"""Exception hierarchy shared across the package."""


class HypasymError(Exception):
    """Base class for all package errors."""


class DomainError(HypasymError, ValueError):
    """Input outside the mathematical domain of an operation."""


class ConfigurationError(HypasymError, ValueError):
    """Invalid configuration value (precision floor, flags, ...)."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class NumericalError(HypasymError, ArithmeticError):
    """An iteration failed to converge within its budget."""


class ResourceError(HypasymError, RuntimeError):
    """A computation exceeded its precision or term budget."""
