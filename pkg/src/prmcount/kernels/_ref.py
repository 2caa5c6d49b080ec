"""NumPy reference implementation of the patch resampling kernels.

The compiled backend in ``_fast.pyx`` mirrors these formulas operation by
operation so that both produce bit-identical float32 output.
"""
import numpy as np

__all__ = ["upscale2x_bilinear", "downscale2x_area"]


def _up_taps(n: int):
    """Neighbor indices and high-side weights for 2x bilinear upsampling.

    Output sample i maps to source coordinate i/2 - 0.25 (half-pixel
    convention), which reduces to a fixed two-phase filter with weights
    0.25 / 0.75; edges clamp.
    """
    i = np.arange(2 * n)
    m = i // 2
    even = (i % 2) == 0
    lo = np.where(even, m - 1, m)
    hi = lo + 1
    w = np.where(even, np.float32(0.75), np.float32(0.25)).astype(np.float32)
    lo = np.clip(lo, 0, n - 1)
    hi = np.clip(hi, 0, n - 1)
    return lo, hi, w


def upscale2x_bilinear(src: np.ndarray) -> np.ndarray:
    """Upscale an (H, W, C) float32 array to (2H, 2W, C) bilinearly.

    Separable two-pass interpolation in float32; output clamped to [0, 1].
    Constant inputs are reproduced exactly.
    """
    if src.ndim != 3 or src.dtype != np.float32:
        raise ValueError("expected float32 array of shape (H, W, C)")
    h, w, _ = src.shape
    ylo, yhi, wy = _up_taps(h)
    xlo, xhi, wx = _up_taps(w)

    a = src[ylo]
    b = src[yhi]
    rows = a + wy[:, None, None] * (b - a)  # (2H, W, C)

    left = rows[:, xlo]
    right = rows[:, xhi]
    out = left + wx[None, :, None] * (right - left)
    np.clip(out, 0.0, 1.0, out=out)
    return out


def downscale2x_area(src: np.ndarray) -> np.ndarray:
    """Downscale an (H, W, C) float32 array to (H/2, W/2, C) by 2x2 averaging.

    H and W must be even. Pairwise summation keeps constants exact.
    """
    if src.ndim != 3 or src.dtype != np.float32:
        raise ValueError("expected float32 array of shape (H, W, C)")
    h, w, _ = src.shape
    if h % 2 or w % 2:
        raise ValueError("height and width must be even")
    a = src[0::2, 0::2]
    b = src[0::2, 1::2]
    c = src[1::2, 0::2]
    d = src[1::2, 1::2]
    return ((a + b) + (c + d)) * np.float32(0.25)
