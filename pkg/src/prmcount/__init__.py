"""Patch-rescaling crowd counting toolkit.

Counting works on fixed 224x224 patches: each patch gets a 4-way crowd
density label (no/low/medium/high crowd), is rescaled or discarded
accordingly, and the per-patch counts are summed into the image estimate.
The package ships the rescaling primitives, ground-truth labeling,
analytic architecture descriptors, pluggable count predictors, three
counting pipelines, and an evaluation harness driven by one CLI.
"""

__version__ = "0.1.0"

ARCHIVE_FORMAT_VERSION = 1

from .geometry import PATCH_SIZE, Patch, PixelGrid, Rect, tile
from .prm import DensityClass, PrmOutput, RescaleOp, route

__all__ = [
    "ARCHIVE_FORMAT_VERSION",
    "DensityClass",
    "PATCH_SIZE",
    "Patch",
    "PixelGrid",
    "PrmOutput",
    "Rect",
    "RescaleOp",
    "route",
    "__version__",
]
