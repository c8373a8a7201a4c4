"""JIT switch for the hot kernels.

Kernels are written in the numba-compatible subset of Python over numpy
arrays.  When numba is importable and ``SPARSEMAPS_NO_JIT`` is unset (or
``0``), they are compiled with ``numba.njit``; otherwise the very same
functions run as plain Python.
"""

import os

_flag = os.environ.get("SPARSEMAPS_NO_JIT", "").strip().lower()
_disabled = _flag not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError
    from numba import njit as _numba_njit
except ImportError:
    _numba_njit = None

USING_NUMBA = _numba_njit is not None


def njit(func=None, **kwargs):
    """``numba.njit`` when enabled, identity decorator otherwise."""
    if func is None:
        return lambda f: njit(f, **kwargs)
    if _numba_njit is None:
        return func
    kwargs.setdefault("cache", True)
    return _numba_njit(**kwargs)(func)
