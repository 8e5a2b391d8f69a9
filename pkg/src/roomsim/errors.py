"""Exception hierarchy shared across the package."""


class RoomsimError(Exception):
    """Base class for all errors raised by roomsim."""


class GeometryError(RoomsimError):
    """Degenerate or inconsistent geometry (zero-area wall, self-intersecting
    polygon, walls that do not bound a closed region)."""


class ConfigError(RoomsimError):
    """Invalid parameter value (absorption out of range, non-positive height,
    non-rational resampling ratio, singular noise floor)."""


class UsageError(ConfigError):
    """API misuse: wrong sample count, mismatched configs, unknown method
    label.  Mapped to exit code 2 by the CLI."""


class SingularityError(RoomsimError):
    """A receiver coincides with a source or image position."""


class SceneError(RoomsimError):
    """Scene validation failure with a machine-readable code and a path into
    the scene document."""

    # distinct codes per failure family
    SCHEMA = "SCENE_SCHEMA"
    POSITION = "SCENE_POSITION"
    RANGE = "SCENE_RANGE"
    FILE = "SCENE_FILE"
    SIGNAL = "SCENE_SIGNAL"

    def __init__(self, code, message, path=""):
        self.code = code
        self.path = path
        loc = f" at {path}" if path else ""
        super().__init__(f"[{code}]{loc}: {message}")
