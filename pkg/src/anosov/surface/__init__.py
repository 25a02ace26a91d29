"""Boundary surfaces of the model block of a geometric type."""

from .census import RawComponent, raw_census
from .complex import StripTable, SurfaceComplex, build_complex
from .lamination import CycleLeaf, LeafTrace, cycle_leaves, extremes, trace_leaf
from .layout import QUARTERS, THIRDS, BandLayout
from .realize import (
    BlockBoundarySummary,
    BlockTorus,
    RealizabilityVerdict,
    SurfaceComponent,
    Violation,
    block_boundary_summary,
    check_realizable_filled,
    surface_census,
)
from .regions import GapEntry, RegionAnalysis


def classify_gaps(cx: SurfaceComplex) -> list[GapEntry]:
    return RegionAnalysis(cx).gap_report()


__all__ = [
    "BandLayout",
    "BlockBoundarySummary",
    "BlockTorus",
    "CycleLeaf",
    "GapEntry",
    "LeafTrace",
    "QUARTERS",
    "RawComponent",
    "RealizabilityVerdict",
    "RegionAnalysis",
    "StripTable",
    "SurfaceComplex",
    "SurfaceComponent",
    "THIRDS",
    "Violation",
    "block_boundary_summary",
    "build_complex",
    "check_realizable_filled",
    "classify_gaps",
    "cycle_leaves",
    "extremes",
    "raw_census",
    "surface_census",
    "trace_leaf",
]
