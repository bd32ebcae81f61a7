"""Kernel selection: compiled extension when built, pure Python otherwise.

Set ``SKEINCALC_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("SKEINCALC_PURE"):
        raise ImportError("pure-Python kernels requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
state_sum = _compiled.state_sum if _compiled is not None else _kernels_py.state_sum
state_sum_py = _kernels_py.state_sum
state_sum_compiled = _compiled.state_sum if _compiled is not None else None
