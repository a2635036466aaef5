"""Hot-kernel backend selection.

The compiled extension (``_speedups``, built from Cython) is preferred when
importable; otherwise the pure-Python fallback is used. Both expose the same
three functions with identical results. Set ``MATCHSTICKS_KERNELS=python``
to force the fallback, ``=c`` to insist on the compiled core.
"""

from __future__ import annotations

import os

from . import pyfallback

_choice = os.environ.get("MATCHSTICKS_KERNELS", "").strip().lower()

if _choice == "python":
    _impl = pyfallback
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        if _choice == "c":
            raise
        _impl = pyfallback
        BACKEND = "python"

segment_conflicts = _impl.segment_conflicts
distance_band_pairs = _impl.distance_band_pairs
window_best = _impl.window_best

__all__ = ["segment_conflicts", "distance_band_pairs", "window_best", "BACKEND"]
