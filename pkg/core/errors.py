# === core/errors.py ===


class ParameterError(ValueError):
    """Invalid argument passed to a numerical operation."""
