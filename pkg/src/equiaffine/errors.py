"""Exception classes shared across the library and mapped to CLI exit codes."""


class EquiAffineError(Exception):
    """Base class for all library errors."""


class ConfigError(EquiAffineError):
    """A parameter is outside its documented range (CLI exit code 3)."""


class DegenerateDataError(EquiAffineError):
    """Input data cannot support the requested operation, e.g. collinear
    point sets, fewer than 3 matches, or a zero-gradient moving-frame
    point (CLI exit code 4)."""


class InstabilityError(EquiAffineError):
    """A PDE evolution produced NaN; message names the step and dt
    (CLI exit code 5)."""
