"""Numerical zero threshold, overridable through the environment."""

import os

DEFAULT_TOL = 1e-9
_ENV_VAR = "CUSPVAN_TOL"


def zero_tol():
    """Current magnitude below which a complex value counts as zero.

    Reads CUSPVAN_TOL at call time so tests and callers can override it
    without re-importing anything.
    """
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT_TOL
    try:
        value = float(raw)
    except ValueError:
        return DEFAULT_TOL
    return value if value > 0 else DEFAULT_TOL
