"""Arithmetic kernel backend selection.

Prefers the compiled extension, falls back to the pure-Python kernels.
Set FFMIN_PURE=1 to force the fallback (used by the backend benchmark).
"""

import os

if os.environ.get("FFMIN_PURE"):
    from ffmin._core import pure as _impl

    BACKEND = "pure"
else:
    try:
        from ffmin._core import speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from ffmin._core import pure as _impl

        BACKEND = "pure"

poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_mul = _impl.poly_mul
poly_divmod = _impl.poly_divmod
poly_gcd = _impl.poly_gcd
nullspace = _impl.nullspace
norm_table = _impl.norm_table
