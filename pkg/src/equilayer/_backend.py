"""Select the compiled kernels when available, else the pure-Python ones.

Set ``EQUILAYER_BACKEND=python`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("EQUILAYER_BACKEND", "").lower() == "python":
    kernels = _pykernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        kernels = _pykernels

BACKEND: str = kernels.BACKEND
