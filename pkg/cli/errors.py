# === cli/errors.py ===


class CrossCheckError(RuntimeError):
    """Two timed methods disagree before timing starts."""
