"""Modular arithmetic kernels.

The numba backend is used by default.  Setting ``PAINLEVE6_KERNELS=numpy``
selects the uncompiled numpy implementation, which is also used when numba is
not importable.
"""

import os

BACKEND = os.environ.get("PAINLEVE6_KERNELS", "numba").strip().lower()

if BACKEND not in ("numba", "numpy"):
    raise ImportError(f"PAINLEVE6_KERNELS must be 'numba' or 'numpy', got {BACKEND!r}")

if BACKEND == "numba":
    try:
        from . import _numba as _impl
    except ImportError:  # pragma: no cover
        from . import _numpy as _impl

        BACKEND = "numpy"
else:
    from . import _numpy as _impl

powmod = _impl.powmod
poly_eval = _impl.poly_eval
resultant = _impl.resultant
resultant_grid = _impl.resultant_grid
interpolate = _impl.interpolate
interpolate_rows = _impl.interpolate_rows

__all__ = [
    "BACKEND", "powmod", "poly_eval", "resultant", "resultant_grid",
    "interpolate", "interpolate_rows",
]
