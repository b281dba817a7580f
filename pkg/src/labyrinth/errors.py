"""Exception types shared across the package."""


class LabyrinthError(Exception):
    """Base class for all package-specific errors."""


class PropertiesParseError(LabyrinthError):
    """A properties file line could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ConfigError(LabyrinthError):
    """A configuration value failed validation."""

    def __init__(self, message: str, key: str | None = None):
        super().__init__(f"{key}: {message}" if key else message)
        self.key = key


class ReplayFormatError(LabyrinthError):
    """A replay file or input log is malformed."""


class ReplayDigestMismatch(LabyrinthError):
    """A replayed session did not reproduce the recorded digest."""

    def __init__(self, expected: str, actual: str):
        super().__init__(f"digest mismatch: expected {expected}, got {actual}")
        self.expected = expected
        self.actual = actual
