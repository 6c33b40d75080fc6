"""Kernel backend selection.

The compiled extension is preferred when it imports cleanly; the pure-Python
twin is the fallback.  Set ``RLPOWER_PURE_PYTHON=1`` to force the fallback,
which is occasionally useful for debugging and for benchmarking the two
implementations against each other.
"""

from __future__ import annotations

import os

if os.environ.get("RLPOWER_PURE_PYTHON"):
    from . import _kernels_py as kernels
    BACKEND = "pure-python"
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]
        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]
        BACKEND = "pure-python"


def backend_name() -> str:
    """Name of the kernel backend selected at import time."""
    return BACKEND
