"""Kernel dispatch: numba-compiled loops by default, numpy fallbacks on demand.

Set LVM_BACKEND=numpy to force the pure-numpy path (e.g. where numba is
unavailable or for comparison runs); LVM_BACKEND=numba fails hard if numba
cannot be imported. Default ("auto") prefers numba.
"""

import os

_choice = os.environ.get("LVM_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"LVM_BACKEND must be 'auto', 'numba' or 'numpy', got {_choice!r}"
    )

if _choice == "numpy":
    from . import numpy_backend as _impl

    BACKEND = "numpy"
else:
    try:
        from . import numba_backend as _impl

        BACKEND = "numba"
    except ImportError:
        if _choice == "numba":
            raise
        from . import numpy_backend as _impl

        BACKEND = "numpy"

adj_matvec = _impl.adj_matvec
triangle_counts = _impl.triangle_counts
count_infectious = _impl.count_infectious
social_scores = _impl.social_scores

__all__ = [
    "BACKEND",
    "adj_matvec",
    "triangle_counts",
    "count_infectious",
    "social_scores",
]
