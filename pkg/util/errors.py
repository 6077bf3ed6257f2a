class ConfigError(ValueError):
    """Invalid experiment configuration (CLI exit status 2)."""


class NumericFailure(ArithmeticError):
    """A NaN or inf surfaced in a result (CLI exit status 3)."""
