"""Image tiling and the fixed-size patch rescaling primitives.

Everything here is pure: identical inputs give bit-identical outputs, and
no function mutates its arguments.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InvalidInputError

PATCH_SIZE = 224
HALF_PATCH = 112

SCALE_DOWN = 0.5
SCALE_ISO = 1.0
SCALE_UP = 2.0
_VALID_SCALES = (SCALE_DOWN, SCALE_ISO, SCALE_UP)


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle, half-open on the right and bottom edges."""

    x0: int
    y0: int
    w: int
    h: int

    def contains(self, x: float, y: float) -> bool:
        return self.x0 <= x < self.x0 + self.w and self.y0 <= y < self.y0 + self.h

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.x0, self.y0, self.w, self.h)


@dataclass(frozen=True, eq=False)
class PixelGrid:
    """(H, W, C) float32 intensity raster with values in [0, 1]."""

    data: np.ndarray

    def __post_init__(self):
        d = self.data
        if not isinstance(d, np.ndarray) or d.ndim != 3:
            raise InvalidInputError("pixel data must be a (H, W, C) array")
        if d.shape[2] not in (1, 3):
            raise InvalidInputError(f"channels must be 1 or 3, got {d.shape[2]}")
        if d.shape[0] < 1 or d.shape[1] < 1:
            raise InvalidInputError("image dimensions must be positive")
        if d.dtype != np.float32:
            raise InvalidInputError("pixel data must be float32")
        if not np.isfinite(d).all():
            raise InvalidInputError("pixel data contains non-finite values")
        if d.min() < 0.0 or d.max() > 1.0:
            raise InvalidInputError("intensities must lie in [0, 1]")

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def channels(self) -> int:
        return self.data.shape[2]

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "PixelGrid":
        """Build a grid from uint8 or float data; grayscale may be 2-D."""
        a = np.asarray(arr)
        if a.ndim == 2:
            a = a[:, :, None]
        if a.dtype == np.uint8:
            a = a.astype(np.float32) / np.float32(255.0)
        else:
            a = np.ascontiguousarray(a, dtype=np.float32)
        return cls(a)


@dataclass(frozen=True, eq=False)
class Patch:
    """A 224x224 pixel grid plus provenance.

    ``rect`` is the source-image region the patch depicts (original
    coordinates), ``scale`` the factor applied by the last rescaling
    operation, and ``content`` the sub-rectangle of the canvas holding
    real content (outside it is zero padding).
    """

    pixels: PixelGrid
    source_id: str
    rect: Rect
    scale: float
    content: Rect

    def __post_init__(self):
        if self.pixels.height != PATCH_SIZE or self.pixels.width != PATCH_SIZE:
            raise InvalidInputError(
                f"patch must be {PATCH_SIZE}x{PATCH_SIZE}, "
                f"got {self.pixels.height}x{self.pixels.width}"
            )
        if self.scale not in _VALID_SCALES:
            raise InvalidInputError(f"scale must be one of {_VALID_SCALES}")
        c = self.content
        if not (0 <= c.x0 and 0 <= c.y0
                and c.x0 + c.w <= PATCH_SIZE and c.y0 + c.h <= PATCH_SIZE):
            raise InvalidInputError("content box must lie within the canvas")

    def pad_mask(self) -> np.ndarray:
        """(224, 224) boolean mask, True where the canvas is padding."""
        m = np.ones((PATCH_SIZE, PATCH_SIZE), dtype=bool)
        c = self.content
        m[c.y0:c.y0 + c.h, c.x0:c.x0 + c.w] = False
        return m


FULL_CANVAS = Rect(0, 0, PATCH_SIZE, PATCH_SIZE)


def tile(image: PixelGrid, image_id: str = "image") -> list[Patch]:
    """Split an image into non-overlapping 224x224 patches, row-major.

    The image is zero-padded on the right and bottom to the next multiple
    of 224; each patch's ``content`` box records its un-padded region.
    """
    h, w = image.height, image.width
    rows = -(-h // PATCH_SIZE)
    cols = -(-w // PATCH_SIZE)
    padded = np.zeros((rows * PATCH_SIZE, cols * PATCH_SIZE, image.channels),
                      dtype=np.float32)
    padded[:h, :w] = image.data

    patches = []
    for r in range(rows):
        for c in range(cols):
            y0, x0 = r * PATCH_SIZE, c * PATCH_SIZE
            sub = padded[y0:y0 + PATCH_SIZE, x0:x0 + PATCH_SIZE].copy()
            content = Rect(0, 0, min(PATCH_SIZE, w - x0), min(PATCH_SIZE, h - y0))
            patches.append(Patch(
                pixels=PixelGrid(sub),
                source_id=image_id,
                rect=Rect(x0, y0, PATCH_SIZE, PATCH_SIZE),
                scale=SCALE_ISO,
                content=content,
            ))
    return patches


def assemble(patches: list[Patch], height: int, width: int) -> PixelGrid:
    """Inverse of :func:`tile`: rebuild the original image bit-exactly."""
    if not patches:
        raise InvalidInputError("no patches to assemble")
    channels = patches[0].pixels.channels
    rows = -(-height // PATCH_SIZE)
    cols = -(-width // PATCH_SIZE)
    canvas = np.zeros((rows * PATCH_SIZE, cols * PATCH_SIZE, channels),
                      dtype=np.float32)
    for p in patches:
        canvas[p.rect.y0:p.rect.y0 + PATCH_SIZE,
               p.rect.x0:p.rect.x0 + PATCH_SIZE] = p.pixels.data
    return PixelGrid(canvas[:height, :width].copy())


def _quadrant_content(parent: Rect, sy: int, sx: int) -> Rect:
    # Intersect the parent's content box with the quadrant, map into the
    # quadrant's frame, then scale 2x onto the output canvas.
    x0 = max(parent.x0 - sx, 0)
    y0 = max(parent.y0 - sy, 0)
    x1 = min(parent.x0 + parent.w - sx, HALF_PATCH)
    y1 = min(parent.y0 + parent.h - sy, HALF_PATCH)
    if x1 <= x0 or y1 <= y0:
        return Rect(0, 0, 0, 0)
    return Rect(2 * x0, 2 * y0, 2 * (x1 - x0), 2 * (y1 - y0))


def upscale_split(p: Patch) -> list[Patch]:
    """Split a patch into its four 112x112 quadrants and upscale each to 224x224.

    Quadrants are ordered TL, TR, BL, BR and exactly partition the source;
    each output records the quadrant's source region and scale 2.
    """
    out = []
    half_w = p.rect.w // 2
    half_h = p.rect.h // 2
    for sy, sx in ((0, 0), (0, HALF_PATCH), (HALF_PATCH, 0), (HALF_PATCH, HALF_PATCH)):
        quad = p.pixels.data[sy:sy + HALF_PATCH, sx:sx + HALF_PATCH]
        up = kernels.upscale2x_bilinear(quad)
        qx0 = p.rect.x0 + (half_w if sx else 0)
        qy0 = p.rect.y0 + (half_h if sy else 0)
        qw = p.rect.w - half_w if sx else half_w
        qh = p.rect.h - half_h if sy else half_h
        out.append(Patch(
            pixels=PixelGrid(up),
            source_id=p.source_id,
            rect=Rect(qx0, qy0, qw, qh),
            scale=SCALE_UP,
            content=_quadrant_content(p.content, sy, sx),
        ))
    return out


def downscale_pad(p: Patch) -> Patch:
    """Shrink a patch 2x and zero-pad it back to 224x224 (content top-left)."""
    small = kernels.downscale2x_area(p.pixels.data)
    canvas = np.zeros((PATCH_SIZE, PATCH_SIZE, p.pixels.channels), dtype=np.float32)
    canvas[:HALF_PATCH, :HALF_PATCH] = small
    c = p.content
    cx0, cy0 = c.x0 // 2, c.y0 // 2
    cx1 = -(-(c.x0 + c.w) // 2)
    cy1 = -(-(c.y0 + c.h) // 2)
    return Patch(
        pixels=PixelGrid(canvas),
        source_id=p.source_id,
        rect=p.rect,
        scale=SCALE_DOWN,
        content=Rect(cx0, cy0, cx1 - cx0, cy1 - cy0),
    )


def iso(p: Patch) -> Patch:
    """Identity pass-through for medium-density patches."""
    return p


def hflip(p: Patch) -> Patch:
    """Horizontal mirror of the patch pixels; provenance kept as-is."""
    c = p.content
    return Patch(
        pixels=PixelGrid(p.pixels.data[:, ::-1].copy()),
        source_id=p.source_id,
        rect=p.rect,
        scale=p.scale,
        content=Rect(PATCH_SIZE - c.x0 - c.w, c.y0, c.w, c.h),
    )
