"""Exception types shared across the package."""


class CfifcError(Exception):
    """Base class for all library errors."""


class NotPositiveDefinite(CfifcError):
    """Gram matrix is not positive definite."""


class NumericalInstability(CfifcError):
    """An iterative routine failed to converge (degenerate input)."""


class RadiusExceeded(CfifcError):
    """Enumeration box is larger than the caller's radius cap."""


class ZeroVector(CfifcError):
    """Coefficient vector (0, 0) cannot define a decoding equation."""


class PrecisionCap(CfifcError):
    """SNR above the double-precision budget (140 dB)."""


class InvalidSnr(CfifcError):
    """SNR outside the domain of the requested operation."""


class NotCoprime(CfifcError):
    """p/q must be in lowest terms."""


class NotUnimodular(CfifcError):
    """Integer matrix determinant is not exactly +-1."""


class DegenerateMap(CfifcError):
    """Moebius map with zero denominator row."""


class InvalidSlotCount(CfifcError):
    """Slot plans need at least one slot."""


class ZeroEta(CfifcError):
    """Precoder gain must be nonzero."""


class ConfigError(CfifcError):
    """Configuration file problem (syntax or value)."""


class UnknownKey(ConfigError):
    """Configuration key does not match any sweep field."""
