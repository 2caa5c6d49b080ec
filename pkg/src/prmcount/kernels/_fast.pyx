# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled resampling kernels.

Mirrors ``prmcount.kernels._ref`` operation by operation; compiled with
-ffp-contract=off so float32 results are bit-identical to the fallback.
"""
import numpy as np


def upscale2x_bilinear(src):
    if src.ndim != 3 or src.dtype != np.float32:
        raise ValueError("expected float32 array of shape (H, W, C)")
    return _upscale2x(src)


def downscale2x_area(src):
    if src.ndim != 3 or src.dtype != np.float32:
        raise ValueError("expected float32 array of shape (H, W, C)")
    if src.shape[0] % 2 or src.shape[1] % 2:
        raise ValueError("height and width must be even")
    return _downscale2x(src)


cdef void _fill_taps(Py_ssize_t n, Py_ssize_t[::1] lo, Py_ssize_t[::1] hi,
                     float[::1] w) nogil:
    cdef Py_ssize_t i, m
    for i in range(2 * n):
        m = i // 2
        if i % 2 == 0:
            lo[i] = m - 1
            hi[i] = m
            w[i] = 0.75
        else:
            lo[i] = m
            hi[i] = m + 1
            w[i] = 0.25
        if lo[i] < 0:
            lo[i] = 0
        if hi[i] > n - 1:
            hi[i] = n - 1


def _upscale2x(const float[:, :, :] src):
    cdef Py_ssize_t h = src.shape[0], w = src.shape[1], ch = src.shape[2]
    rows_np = np.empty((2 * h, w, ch), dtype=np.float32)
    out_np = np.empty((2 * h, 2 * w, ch), dtype=np.float32)
    ylo_np = np.empty(2 * h, dtype=np.intp)
    yhi_np = np.empty(2 * h, dtype=np.intp)
    wy_np = np.empty(2 * h, dtype=np.float32)
    xlo_np = np.empty(2 * w, dtype=np.intp)
    xhi_np = np.empty(2 * w, dtype=np.intp)
    wx_np = np.empty(2 * w, dtype=np.float32)

    cdef float[:, :, ::1] rows = rows_np
    cdef float[:, :, ::1] out = out_np
    cdef Py_ssize_t[::1] ylo = ylo_np, yhi = yhi_np, xlo = xlo_np, xhi = xhi_np
    cdef float[::1] wy = wy_np, wx = wx_np
    cdef Py_ssize_t i, j, c
    cdef float a, b, v

    with nogil:
        _fill_taps(h, ylo, yhi, wy)
        _fill_taps(w, xlo, xhi, wx)
        for i in range(2 * h):
            for j in range(w):
                for c in range(ch):
                    a = src[ylo[i], j, c]
                    b = src[yhi[i], j, c]
                    rows[i, j, c] = a + wy[i] * (b - a)
        for i in range(2 * h):
            for j in range(2 * w):
                for c in range(ch):
                    a = rows[i, xlo[j], c]
                    b = rows[i, xhi[j], c]
                    v = a + wx[j] * (b - a)
                    if v < 0.0:
                        v = 0.0
                    elif v > 1.0:
                        v = 1.0
                    out[i, j, c] = v
    return out_np


def _downscale2x(const float[:, :, :] src):
    cdef Py_ssize_t h = src.shape[0] // 2, w = src.shape[1] // 2
    cdef Py_ssize_t ch = src.shape[2]
    out_np = np.empty((h, w, ch), dtype=np.float32)
    cdef float[:, :, ::1] out = out_np
    cdef Py_ssize_t i, j, c
    with nogil:
        for i in range(h):
            for j in range(w):
                for c in range(ch):
                    out[i, j, c] = ((src[2 * i, 2 * j, c] + src[2 * i, 2 * j + 1, c])
                                    + (src[2 * i + 1, 2 * j, c] + src[2 * i + 1, 2 * j + 1, c])) * 0.25
    return out_np
