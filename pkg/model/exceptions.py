class MalformedFieldError(ValueError):
    """Spectral coefficients that do not describe a real field."""


class PreconditionError(ValueError):
    pass


class BlowUpError(RuntimeError):

    def __init__(self, t, message="non-finite tendency"):
        super().__init__(f"{message} at t={t:.6e}")
        self.t = t


class ConfigError(ValueError):

    def __init__(self, message, line=None, field=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
        self.field = field
