"""Patch rescaling module (PRM): density-class driven patch routing.

A classified patch is discarded (no crowd), downscaled (low crowd),
forwarded untouched (medium crowd), or split into four upscaled quadrants
(high crowd). The router is stateless and parameter-free; all geometry
constants live in :mod:`prmcount.geometry`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .geometry import Patch, downscale_pad, iso, upscale_split


class DensityClass(enum.IntEnum):
    """4-way crowd density label; ordering NC < LC < MC < HC."""

    NC = 0
    LC = 1
    MC = 2
    HC = 3

    @classmethod
    def parse(cls, name: str) -> "DensityClass":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown density class {name!r}") from None


class RescaleOp(enum.Enum):
    DISCARD = "discard"
    DOWNSCALE = "downscale"
    ISO = "iso"
    UPSCALE = "upscale"


# Patches produced per routed input, a function of the class alone.
OUTPUT_CARDINALITY = {
    DensityClass.NC: 0,
    DensityClass.LC: 1,
    DensityClass.MC: 1,
    DensityClass.HC: 4,
}


@dataclass(frozen=True, eq=False)
class PrmOutput:
    patches: tuple[Patch, ...]
    operation: RescaleOp


def route(p: Patch, density: DensityClass) -> PrmOutput:
    """Apply the rescaling operation selected by the density class."""
    if density == DensityClass.NC:
        return PrmOutput((), RescaleOp.DISCARD)
    if density == DensityClass.LC:
        return PrmOutput((downscale_pad(p),), RescaleOp.DOWNSCALE)
    if density == DensityClass.MC:
        return PrmOutput((iso(p),), RescaleOp.ISO)
    return PrmOutput(tuple(upscale_split(p)), RescaleOp.UPSCALE)
