"""Select the compute backend at import time.

Prefers the compiled ``_speedups`` extension, falling back to the pure-Python
``_speedups_py`` module.  Set ``DYCKQ_PURE=1`` to force the fallback (used by
the backend-comparison benchmark and the cross-backend tests).
"""

from __future__ import annotations

import os

if os.environ.get("DYCKQ_PURE"):
    from . import _speedups_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _speedups_py as _impl

BACKEND = _impl.BACKEND_NAME

classical_check_codes = _impl.classical_check_codes
pm_tables = _impl.pm_tables
scan_leftmost = _impl.scan_leftmost
scan_rightmost = _impl.scan_rightmost
scan_cost = _impl.scan_cost
run_attempts = _impl.run_attempts
