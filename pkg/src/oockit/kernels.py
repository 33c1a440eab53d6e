"""Correlation kernel backend selection.

Prefers the compiled extension when it was built; falls back to the pure
Python implementation otherwise.  Setting OOCKIT_PURE=1 in the environment
forces the fallback (useful for benchmarking and for testing parity).
"""

from __future__ import annotations

import os

if os.environ.get("OOCKIT_PURE"):
    from . import _corr_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _corr as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _corr_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

corr_profile = _impl.corr_profile
sweep_auto = _impl.sweep_auto
sweep_cross = _impl.sweep_cross
