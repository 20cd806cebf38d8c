"""Exception types shared across the package."""


class PointNotInChart(ValueError):
    """Raised when a projective point lies outside the requested affine chart."""


class ProjectorConstraintViolated(ValueError):
    """Raised when a coefficient triple is not fixed by the tautological projector."""


class RadialRangeError(ValueError):
    """Raised when a dilation would move section support out of the radial grid."""


class ConfigError(ValueError):
    """Raised for invalid harness configuration (bad suite name, bad flag values)."""
