"""Exception types raised by the package."""


class SicheckError(Exception):
    """Base class for all package errors."""


class DataError(SicheckError):
    """Malformed or unusable input data."""


class ConfigError(SicheckError):
    """Invalid configuration value."""


class SingularDesignError(SicheckError):
    """Covariate design matrix is rank deficient."""


class InsufficientDataError(SicheckError):
    """Too few observations for the requested estimate."""


class DegenerateDirectionError(SicheckError):
    """Fitted slope vector is numerically zero; no direction exists."""


class DegenerateVarianceError(SicheckError):
    """Variance estimate is zero, so the standardized statistic is undefined."""


class NearSingularCovarianceError(SicheckError):
    """Weight covariance matrix is numerically singular."""
