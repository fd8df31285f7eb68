"""Vertical strips, restriction lines and the per-strip segment-stabbing solver."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import kernels
from .geometry import (
    Disk,
    InfeasiblePointError,
    Norm,
    Point,
    as_array,
    half_lengths,
    segment_half_length,
)


@dataclass(frozen=True)
class StripConfig:
    """Strip ``k`` is the half-open slab ``[offset + k*width, offset + (k+1)*width)``."""

    width: float
    boundary_offset: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.width) and 0.0 < self.width <= 2.0):
            raise ValueError(f"strip width must lie in (0, 2], got {self.width!r}")
        if not math.isfinite(self.boundary_offset):
            raise ValueError("boundary offset must be finite")


class Segment(NamedTuple):
    lo: float
    hi: float
    source: int = 0


def strip_index(cfg: StripConfig, x: float) -> int:
    a, w = cfg.boundary_offset, cfg.width
    k = math.floor((x - a) / w)
    # the division can round across a boundary; settle it with the defining comparisons
    if a + k * w > x:
        k -= 1
    elif a + (k + 1) * w <= x:
        k += 1
    return k


def strip_indices(cfg: StripConfig, xs: np.ndarray) -> np.ndarray:
    """Vectorized :func:`strip_index`."""
    a, w = cfg.boundary_offset, cfg.width
    k = np.floor((xs - a) / w)
    k -= a + k * w > xs
    k += a + (k + 1) * w <= xs
    return k.astype(np.int64)


def restriction_line_x(cfg: StripConfig, k: int) -> float:
    return cfg.boundary_offset + (k + 0.5) * cfg.width


def partition(cfg: StripConfig, points: Iterable[Sequence[float]]) -> dict[int, list[Point]]:
    """Bucket points by strip index; keys ascending, input order kept inside a bucket."""
    pts = [Point(float(x), float(y)) for x, y in points]
    if not pts:
        return {}
    ks = strip_indices(cfg, np.array(pts, dtype=np.float64)[:, 0])
    order = np.argsort(ks, kind="stable")
    out: dict[int, list[Point]] = {}
    for i in order.tolist():
        out.setdefault(int(ks[i]), []).append(pts[i])
    return out


def point_to_segment(norm: Norm, line_x: float, p: Sequence[float], source: int = 0) -> Segment:
    """Ordinates on the line ``x = line_x`` from which a unit disk covers ``p``."""
    h = segment_half_length(norm, p[0] - line_x)
    return Segment(p[1] - h, p[1] + h, source)


def stab_greedy(segments: Iterable[Segment]) -> list[float]:
    """Minimum set of stab ordinates, strictly decreasing.

    Segments are scanned by lower endpoint, highest first; each unstabbed one
    contributes its lower endpoint. Ties on ``lo`` are broken by ``hi``
    descending, then by source index.
    """
    segs = [s if isinstance(s, Segment) else Segment(*s) for s in segments]
    for s in segs:
        if not s.lo <= s.hi:
            raise ValueError(f"invalid segment {s}")
    if not segs:
        return []
    lo = np.array([s.lo for s in segs], dtype=np.float64)
    hi = np.array([s.hi for s in segs], dtype=np.float64)
    src = np.array([s.source for s in segs], dtype=np.int64)
    order = np.lexsort((src, -hi, -lo))
    lo, hi = lo[order], hi[order]
    idx = kernels.stab_strip_ranges(lo, hi, np.array([0, len(segs)], dtype=np.int64))
    return lo[idx].tolist()


def solve_strip(norm: Norm, line_x: float, points: Iterable[Sequence[float]]) -> list[Disk]:
    """Optimal line-restricted cover of ``points`` by disks centered on ``x = line_x``."""
    segs = [point_to_segment(norm, line_x, p, i) for i, p in enumerate(points)]
    return [Disk(Point(line_x, c), norm) for c in stab_greedy(segs)]


def sort_by_x(points) -> tuple[np.ndarray, np.ndarray]:
    """Coordinates reordered by x ascending; shared by every shift of one instance."""
    xy = as_array(points)
    order = np.argsort(xy[:, 0], kind="stable")
    return np.ascontiguousarray(xy[order, 0]), np.ascontiguousarray(xy[order, 1])


def solve_sorted(norm: Norm, cfg: StripConfig, xs: np.ndarray, ys: np.ndarray, backend: str | None = None):
    """:func:`solve_strips` on coordinates already sorted by x.

    Strips are then contiguous ranges, so the kernel sorts and scans each
    one in place.
    """
    n = xs.shape[0]
    if n == 0:
        return np.empty((0, 2)), np.empty(0, dtype=np.int64)
    k = strip_indices(cfg, xs)
    if (np.diff(k) < 0).any():  # pragma: no cover - guards unsorted input
        raise ValueError("xs must be sorted ascending")
    starts = np.concatenate(([0], np.flatnonzero(np.diff(k)) + 1, [n])).astype(np.int64)
    line = cfg.boundary_offset + (k + 0.5) * cfg.width
    half = 0.5 * cfg.width
    dx = xs - line
    # strip membership already bounds |dx| by width/2; clamp the last-ulp rounding
    np.clip(dx, -half, half, out=dx)
    h = half_lengths(norm, dx)
    lo = ys - h
    hi = ys + h
    scan = kernels.BACKENDS[backend] if backend else kernels.stab_strip_ranges
    idx = scan(lo, hi, starts)
    return np.column_stack((line[idx], lo[idx])), k[idx]


def solve_strips(norm: Norm, cfg: StripConfig, points, backend: str | None = None):
    """Solve every nonempty strip of ``points`` independently.

    Returns ``(centers, strip_ids)`` ordered by strip index ascending, then by
    center ordinate descending. Each strip is covered as if no other strip
    existed.
    """
    xs, ys = sort_by_x(points)
    return solve_sorted(norm, cfg, xs, ys, backend)


__all__ = [
    "InfeasiblePointError",
    "Segment",
    "StripConfig",
    "partition",
    "point_to_segment",
    "restriction_line_x",
    "solve_strip",
    "solve_sorted",
    "solve_strips",
    "sort_by_x",
    "stab_greedy",
    "strip_index",
    "strip_indices",
]
