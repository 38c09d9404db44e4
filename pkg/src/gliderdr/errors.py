"""Exception hierarchy shared by all gliderdr modules."""


class GliderDrError(Exception):
    """Base class for all gliderdr errors."""


class GimbalProximityError(GliderDrError):
    """Pitch angle is inside the guard band around the +/-90 deg singularity."""


class SingularMassError(GliderDrError):
    """Combined rigid-body/added mass matrix is numerically singular."""


class ConfigError(GliderDrError):
    """Invalid or inconsistent configuration value."""


class SchemaMismatchError(GliderDrError):
    """Dataset or model file schema does not match what the caller expects."""


class DivergenceError(GliderDrError):
    """Training error became non-finite."""


class ShapeMismatchError(GliderDrError, ValueError):
    """Array shape is inconsistent with the model or operation."""


class LengthMismatchError(GliderDrError, ValueError):
    """Paired series have different lengths."""
