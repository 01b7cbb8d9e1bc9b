"""Backend selection for the integer-matrix kernels.

Prefers the compiled extension; falls back to the pure-Python reference.
Set ``GCOVER_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and by the test suite to cross-check the two implementations).
"""

import os

if os.environ.get("GCOVER_PURE_PYTHON"):
    from gcover import _purekernels as _impl
else:
    try:
        from gcover import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from gcover import _purekernels as _impl

BACKEND = _impl.BACKEND
imat_mul = _impl.imat_mul
imat_rref = _impl.imat_rref
imat_det = _impl.imat_det

__all__ = ["BACKEND", "imat_mul", "imat_rref", "imat_det"]
