"""Optional numba acceleration.

Setting ``MATCHMOMENTS_DISABLE_NUMBA=1`` in the environment (or running
without numba installed) makes :data:`NUMBA_ENABLED` false, and the kernels
in :mod:`matchmoments._kernels` dispatch to their pure-numpy versions.
"""
import os

_DISABLE_FLAG = "MATCHMOMENTS_DISABLE_NUMBA"

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_ENABLED = numba is not None and os.environ.get(_DISABLE_FLAG, "0").lower() not in ("1", "true", "yes")


def njit(*args, **kwargs):
    """``numba.njit`` when numba is usable, otherwise a no-op decorator.

    Works both bare (``@njit``) and with options (``@njit(cache=True)``).
    """
    if numba is None:
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f
    return numba.njit(*args, **kwargs)


def backend_name():
    return "numba" if NUMBA_ENABLED else "numpy"
