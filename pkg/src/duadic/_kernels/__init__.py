"""Backend dispatch for the exhaustive minimum-weight kernels.

The compiled Cython backend is preferred when its extension module built;
the pure-Python backend is the fallback and the reference implementation.
Set ``DUADIC_PURE_PYTHON=1`` to force the fallback.  ``BACKEND`` names the
selected implementation ("compiled" or "python").
"""

import os

from . import _distance_py

if os.environ.get("DUADIC_PURE_PYTHON"):
    _impl = _distance_py
    BACKEND = "python"
else:
    try:
        from . import _distance_cy as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _distance_py
        BACKEND = "python"

min_weight_prime = _impl.min_weight_prime
min_weight_table = _impl.min_weight_table

__all__ = ["BACKEND", "min_weight_prime", "min_weight_table"]
