"""Backend selection for the hot per-strip scan.

The compiled Cython kernel is used when importable. Setting ``UDC_PURE_PYTHON=1``
forces the fallback, which is also what runs when the extension was not built.
Both stay reachable through :data:`BACKENDS` for benchmarking.
"""

import os

from . import _kernels_py

BACKENDS = {"python": _kernels_py.stab_strip_ranges}

try:
    from . import _kernels
except ImportError:  # pragma: no cover - depends on build environment
    pass
else:
    BACKENDS["cython"] = _kernels.stab_strip_ranges

if "cython" in BACKENDS and not os.environ.get("UDC_PURE_PYTHON"):
    BACKEND = "cython"
else:
    BACKEND = "python"

stab_strip_ranges = BACKENDS[BACKEND]
