"""Kernel backend selection.

Two interchangeable implementations of the hot loops live here: a numba
jitted one and a pure-numpy one. The active backend is chosen per call from
the ``CLIQUETOOLS_BACKEND`` environment variable:

* ``auto`` (default): numba when importable, numpy otherwise
* ``numba``: require the jitted backend, raise if numba is missing
* ``numpy``: force the fallback

``benchmarks/bench_backends.py`` compares the two.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import numpy_backend

STATUS_DONE = numpy_backend.STATUS_DONE
STATUS_UB = numpy_backend.STATUS_UB
STATUS_STOP = numpy_backend.STATUS_STOP

ENV_VAR = "CLIQUETOOLS_BACKEND"

_numba_module: ModuleType | None = None
_numba_error: Exception | None = None


def _load_numba() -> ModuleType | None:
    global _numba_module, _numba_error
    if _numba_module is None and _numba_error is None:
        try:
            from . import numba_backend

            _numba_module = numba_backend
        except ImportError as exc:  # numba not installed
            _numba_error = exc
    return _numba_module


def get_backend() -> ModuleType:
    """Resolve the active kernel module from the environment."""
    choice = os.environ.get(ENV_VAR, "auto").strip().lower()
    if choice in ("", "auto"):
        return _load_numba() or numpy_backend
    if choice == "numpy":
        return numpy_backend
    if choice == "numba":
        mod = _load_numba()
        if mod is None:
            raise ImportError(
                f"{ENV_VAR}=numba but numba is not importable: {_numba_error}"
            )
        return mod
    raise ValueError(f"unrecognized {ENV_VAR}={choice!r}; use auto, numba, or numpy")


def backend_name() -> str:
    """Name of the backend `get_backend` currently resolves to."""
    mod = get_backend()
    return "numba" if mod is not numpy_backend else "numpy"


def warm_up() -> None:
    """Force jit compilation of every kernel on a toy input.

    Useful before timing anything; a no-op on the numpy backend.
    """
    import numpy as np

    mod = get_backend()
    indptr = np.array([0, 2, 4, 6], dtype=np.int64)
    indices = np.array([1, 2, 0, 2, 0, 1], dtype=np.int32)
    mod.triangle_counts(indptr, indices, 3)
    mod.core_peel(indptr, indices, 3)
    degs = np.array([2, 2, 2], dtype=np.int64)
    wit = np.zeros(3, dtype=np.int32)
    mod.greedy_cliques(indptr, indices, degs, np.arange(3, dtype=np.int32), wit)
    bits = np.array([[2], [1]], dtype=np.uint64)
    shared = np.zeros(1, dtype=np.int64)
    stop = np.zeros(1, dtype=np.uint8)
    mod.search_subtree(bits, 0, 1 << 60, shared, stop, wit)
    src = np.array([0, 1], dtype=np.int32)
    dst = np.array([1, 2], dtype=np.int32)
    ptr = np.array([0, 1, 2], dtype=np.int64)
    reach = mod.reach_sweep(3, 1, src, dst, ptr)
    mod.mutual_pairs(reach)
