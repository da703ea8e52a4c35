"""Exception types shared across the package."""


class UnphysicalStateError(ValueError):
    """A coherency matrix or Stokes vector fails the physicality checks."""


class ZeroIntensityError(ValueError):
    """An operation is undefined because the total intensity is zero."""


class DegenerateSampleError(ZeroIntensityError):
    """A noisy intensity table summed to a non-positive total."""


class ConfigError(ValueError):
    """A sweep configuration field is out of range or malformed."""
