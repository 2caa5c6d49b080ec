"""Ground-truth machinery: patch counts, density labels, and training sets.

Head annotations are (x, y) points; a patch's ground-truth count is the
number of points inside its half-open source rectangle. Density labels
compare the count against fractions of the dataset's maximum per-patch
count using exact integer arithmetic, so threshold cases can never be
misclassified by float rounding.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import InsufficientDataError, InvalidInputError, InvalidProfileError
from .geometry import FULL_CANVAS, PATCH_SIZE, Patch, PixelGrid, Rect, hflip
from .prm import DensityClass

CROP_SIZES = (112, 224, 448)
_CROP_SCALE = {112: 2.0, 224: 1.0, 448: 0.5}


@dataclass(frozen=True)
class HeadAnnotation:
    """Center of one person's head, in image pixel coordinates."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidInputError("head coordinates must be finite")
        if self.x < 0 or self.y < 0:
            raise InvalidInputError("head coordinates must be non-negative")


@dataclass(eq=False)
class AnnotatedImage:
    image: PixelGrid
    heads: list[HeadAnnotation]
    id: str
    clamped: int = 0  # heads moved in-bounds at load time


@dataclass(frozen=True)
class DatasetProfile:
    """Per-dataset normalizer: the maximum people count seen in any patch."""

    c_max: int
    source_split: str = "train"

    def __post_init__(self):
        if self.c_max < 1:
            raise InvalidProfileError(f"c_max must be >= 1, got {self.c_max}")


@dataclass(frozen=True, eq=False)
class LabeledPatch:
    patch: Patch
    gt_count: int
    gt_class: DensityClass
    flipped: bool = False


def patch_count(img: AnnotatedImage, rect: Rect) -> int:
    """Number of head points inside the half-open rectangle."""
    return sum(1 for h in img.heads if rect.contains(h.x, h.y))


def class_of(gt_count: int, c_max: int) -> DensityClass:
    """Density label from a patch count and the dataset maximum.

    NC for zero, LC up to 5% of the maximum, MC up to 20%, HC above.
    Thresholds are compared as 20*count <=> c_max and 5*count <=> c_max,
    which is exact for integer counts.
    """
    if c_max < 1:
        raise InvalidProfileError(f"c_max must be >= 1, got {c_max}")
    if gt_count < 0:
        raise InvalidInputError(f"count must be >= 0, got {gt_count}")
    if gt_count == 0:
        return DensityClass.NC
    if 20 * gt_count <= c_max:
        return DensityClass.LC
    if 5 * gt_count <= c_max:
        return DensityClass.MC
    return DensityClass.HC


def _window_positions(extent: int, window: int, stride: int) -> list[int]:
    pos = list(range(0, extent - window + 1, stride))
    last = extent - window
    if pos[-1] != last:
        pos.append(last)
    return pos


def max_window_count(img: AnnotatedImage, window: int = PATCH_SIZE,
                     stride: int = 16) -> int:
    """Max head count over sliding window x window rectangles at the stride.

    Windows are anchored on a regular grid plus the right/bottom-aligned
    positions; images smaller than the window are treated as zero-padded.
    Uses a 2-D prefix sum over the integer head histogram, which agrees
    exactly with half-open float membership for integer-aligned windows.
    """
    h = max(img.image.height, window)
    w = max(img.image.width, window)
    hist = np.zeros((h, w), dtype=np.int64)
    for head in img.heads:
        xi, yi = int(math.floor(head.x)), int(math.floor(head.y))
        if 0 <= xi < w and 0 <= yi < h:
            hist[yi, xi] += 1
    integral = np.zeros((h + 1, w + 1), dtype=np.int64)
    integral[1:, 1:] = hist.cumsum(0).cumsum(1)

    ys = _window_positions(h, window, stride)
    xs = _window_positions(w, window, stride)
    best = 0
    for y in ys:
        row = (integral[y + window, :] - integral[y, :])
        sums = row[np.asarray(xs) + window] - row[np.asarray(xs)]
        m = int(sums.max())
        if m > best:
            best = m
    return best


def compute_cmax(training_set: list[AnnotatedImage], split: str = "train",
                 stride: int = 16, window: int = PATCH_SIZE) -> DatasetProfile:
    """Maximum per-patch people count across a training split.

    Scans a dense sliding window (default stride 16) over every image.
    An all-empty corpus has no usable maximum and raises.
    """
    if not training_set:
        raise InvalidInputError("training set is empty")
    best = max(max_window_count(img, window, stride) for img in training_set)
    if best < 1:
        raise InvalidProfileError("no heads found in any window; c_max would be 0")
    return DatasetProfile(c_max=best, source_split=split)


def _image_rng(seed: int, image_id: str) -> np.random.Generator:
    digest = hashlib.sha256(f"{seed}:{image_id}".encode()).digest()
    words = [int.from_bytes(digest[i:i + 8], "little") for i in range(0, 32, 8)]
    return np.random.default_rng(words)


def _rescale_crop(crop: np.ndarray, size: int) -> np.ndarray:
    if size == 112:
        return kernels.upscale2x_bilinear(crop)
    if size == 448:
        return kernels.downscale2x_area(crop)
    return crop.copy()


def build_training_set(images: list[AnnotatedImage], profile: DatasetProfile,
                       per_class: int, sizes: tuple[int, ...] = CROP_SIZES,
                       seed: int = 0, max_rounds: int | None = None) -> list[LabeledPatch]:
    """Sample a class-balanced set of labeled 224x224 patches.

    Square crops of side 112, 224, or 448 are drawn uniformly from each
    image (sizes larger than an image are skipped for it), rescaled to
    224x224, and optionally mirrored. The label count is taken from the
    original crop region, never rescaled. Sampling is rejection-based per
    class: candidates only land in classes that still need patches.

    Each image draws from its own RNG stream keyed by (seed, image id),
    so results do not depend on scheduling. Same seed, same output.
    """
    if per_class < 1:
        raise InvalidInputError("per_class must be >= 1")
    if not images:
        raise InvalidInputError("image list is empty")
    sizes = tuple(sorted(set(sizes)))
    if not sizes or any(s not in CROP_SIZES for s in sizes):
        raise InvalidInputError(f"sizes must be a non-empty subset of {CROP_SIZES}")

    order = sorted(images, key=lambda im: im.id)
    rngs = {im.id: _image_rng(seed, im.id) for im in order}
    buckets: dict[DensityClass, list[LabeledPatch]] = {c: [] for c in DensityClass}
    if max_rounds is None:
        max_rounds = max(400, math.ceil(per_class * 200 / len(order)))

    def unfilled():
        return [c for c in DensityClass if len(buckets[c]) < per_class]

    for _ in range(max_rounds):
        if not unfilled():
            break
        for im in order:
            if not unfilled():
                break
            rng = rngs[im.id]
            h, w = im.image.height, im.image.width
            feasible = [s for s in sizes if s <= h and s <= w]
            if not feasible:
                continue
            size = feasible[int(rng.integers(0, len(feasible)))]
            x0 = int(rng.integers(0, w - size + 1))
            y0 = int(rng.integers(0, h - size + 1))
            flip = bool(rng.integers(0, 2))
            rect = Rect(x0, y0, size, size)
            count = patch_count(im, rect)
            cls = class_of(count, profile.c_max)
            if len(buckets[cls]) >= per_class:
                continue
            pixels = _rescale_crop(im.image.data[y0:y0 + size, x0:x0 + size], size)
            patch = Patch(pixels=PixelGrid(pixels), source_id=im.id, rect=rect,
                          scale=_CROP_SCALE[size], content=FULL_CANVAS)
            if flip:
                patch = hflip(patch)
            buckets[cls].append(LabeledPatch(patch, count, cls, flipped=flip))

    missing = unfilled()
    if missing:
        detail = ", ".join(f"{c.name} ({len(buckets[c])}/{per_class})" for c in missing)
        raise InsufficientDataError(
            [c.name for c in missing],
            f"could not sample enough patches for: {detail}",
        )
    out: list[LabeledPatch] = []
    for c in DensityClass:
        out.extend(buckets[c])
    return out
