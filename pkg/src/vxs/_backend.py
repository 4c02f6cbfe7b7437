"""Kernel backend selection.

Environment flags:

  VXS_BACKEND      "auto" (default): numba if importable, else numpy.
                   "numba": require the numba kernels (error if unavailable).
                   "numpy": force the pure-numpy kernels.
  VXS_MAX_THREADS  integer cap on numba's thread pool.  The shipped kernels
                   are sequential, so this only matters for user extensions,
                   but the cap is honored whenever the numba backend loads.

The selected module is exposed as `kernels`; its name as `BACKEND_NAME`.
"""

import os
import warnings

from . import _kernels_numpy

_mode = os.environ.get("VXS_BACKEND", "auto").strip().lower()
if _mode not in ("auto", "numba", "numpy"):
    warnings.warn("VXS_BACKEND=%r not recognized, using auto" % _mode)
    _mode = "auto"

kernels = _kernels_numpy
BACKEND_NAME = "numpy"

if _mode in ("auto", "numba"):
    try:
        import numba

        cap = os.environ.get("VXS_MAX_THREADS")
        if cap:
            try:
                numba.set_num_threads(max(1, min(int(cap), numba.config.NUMBA_NUM_THREADS)))
            except (ValueError, RuntimeError):
                warnings.warn("VXS_MAX_THREADS=%r ignored" % cap)
        from . import _kernels_numba

        kernels = _kernels_numba
        BACKEND_NAME = "numba"
    except ImportError:
        if _mode == "numba":
            raise
        warnings.warn("numba unavailable, falling back to numpy kernels")
