"""Backend selection for the enumeration kernels.

Imports the compiled extension when available, otherwise the pure-Python
fallback.  Set the environment variable ``PASEP_PURE_PYTHON=1`` to force the
fallback (used by the benchmark and by tests that exercise both paths).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("PASEP_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

ascent_pattern_counts = _impl.ascent_pattern_counts
wex_crossing_counts = _impl.wex_crossing_counts
vincular_classical_joint = _impl.vincular_classical_joint
matching_crossing_hist = _impl.matching_crossing_hist
signed_path_table = _impl.signed_path_table
left_factor_counts = _impl.left_factor_counts

__all__ = [
    "BACKEND",
    "ascent_pattern_counts",
    "wex_crossing_counts",
    "vincular_classical_joint",
    "matching_crossing_hist",
    "signed_path_table",
    "left_factor_counts",
]
