"""Resampling kernels with a compiled fast path.

At import time the Cython extension is preferred; if it is missing (or
``PRMCOUNT_PURE=1`` is set) the NumPy fallback takes over. Both backends
produce bit-identical float32 results, which ``tests/test_kernels.py``
asserts and ``benchmarks/bench_kernels.py`` exploits for a fair timing
comparison.
"""
import os

from . import _ref

reference = _ref

_impl = _ref
_backend = "numpy"
if os.environ.get("PRMCOUNT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _fast as _impl  # type: ignore[no-redef]

        _backend = "cython"
    except ImportError:
        pass

upscale2x_bilinear = _impl.upscale2x_bilinear
downscale2x_area = _impl.downscale2x_area


def backend() -> str:
    """Name of the active backend: 'cython' or 'numpy'."""
    return _backend


__all__ = ["backend", "downscale2x_area", "reference", "upscale2x_bilinear"]
