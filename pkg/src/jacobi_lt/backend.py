"""Kernel backend selection.

Hot numeric kernels exist twice: a numba @njit build and a pure-numpy
build. The env var JACOBI_LT_BACKEND picks one of {auto, numba, numpy};
"auto" (the default) uses numba when it imports, numpy otherwise.
"""

import os

ENV_VAR = "JACOBI_LT_BACKEND"
THREADS_ENV_VAR = "JACOBI_LT_THREADS"


def requested_backend():
    val = os.environ.get(ENV_VAR, "auto").strip().lower() or "auto"
    if val not in ("auto", "numba", "numpy"):
        raise ValueError(
            f"{ENV_VAR} must be one of auto|numba|numpy, got {val!r}"
        )
    return val


def pick_backend():
    req = requested_backend()
    if req == "numpy":
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        if req == "numba":
            raise
        return "numpy"
    return "numba"


def apply_thread_cap():
    """Cap kernel parallelism from JACOBI_LT_THREADS (no-op without numba)."""
    val = os.environ.get(THREADS_ENV_VAR)
    if not val:
        return
    n = max(1, int(val))
    try:
        import numba

        numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))
    except ImportError:
        pass
