"""Exception types shared across the package."""


class ParameterError(ValueError):
    """One or more parameters violate their admissible bounds.

    ``violations`` holds every message, so callers loading a whole parameter
    file can report all problems at once.
    """

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ConfigFileError(ParameterError):
    """A parameter file could not be parsed (bad syntax, unknown key, bad type)."""
