"""End-to-end cover algorithms built on oblivious per-strip solving.

``solve_linf`` covers with axis-aligned squares on strips of width 2,
``solve_single_shift`` runs one strip partition in any norm, and
``solve_smoothed`` tries several equally spaced boundary offsets and keeps
the cheapest result.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np
from scipy.spatial import cKDTree

from .geometry import DEFAULT_EPS, CoverSolution, Norm, Point, as_array
from .strips import StripConfig, solve_sorted, sort_by_x

SQRT3 = math.sqrt(3.0)


@dataclass
class AlgorithmReport:
    solution: CoverSolution
    per_shift_counts: list[tuple[float, int]] = field(default_factory=list)
    chosen_shift: float = 0.0
    wall_time: float = 0.0
    algorithm: str = "single"

    @property
    def count(self) -> int:
        return self.solution.count


class CoverCheck(NamedTuple):
    ok: bool
    witness: Optional[Point] = None
    index: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def default_width(norm: Norm) -> float:
    """Strip width whose boundary chord (half-length at offset width/2) equals 1/2.

    This is 2 for Linf and sqrt(3) for L2.
    """
    p = norm.exponent
    if math.isinf(p):
        return 2.0
    if p == 2.0:
        return SQRT3
    return 2.0 * (1.0 - 0.5**p) ** (1.0 / p)


def worker_count(threads: Optional[int] = None) -> int:
    if threads is None:
        threads = int(os.environ.get("UDC_THREADS", "1") or 1)
    return max(1, threads)


def _run_shift(norm: Norm, xy: tuple[np.ndarray, np.ndarray], cfg: StripConfig, backend=None) -> CoverSolution:
    centers, ids = solve_sorted(norm, cfg, xy[0], xy[1], backend=backend)
    return CoverSolution(norm, centers, cfg, ids)


def solve_single_shift(norm: Norm, points, cfg: Optional[StripConfig] = None, *, backend=None) -> AlgorithmReport:
    if cfg is None:
        cfg = StripConfig(default_width(norm), 0.0)
    t0 = time.perf_counter()
    xy = sort_by_x(points)
    sol = _run_shift(norm, xy, cfg, backend)
    return AlgorithmReport(
        solution=sol,
        per_shift_counts=[(cfg.boundary_offset, sol.count)],
        chosen_shift=cfg.boundary_offset,
        wall_time=time.perf_counter() - t0,
        algorithm="single",
    )


def solve_linf(points, cfg: Optional[StripConfig] = None, *, backend=None) -> AlgorithmReport:
    """Square cover; with the default width 2 each strip is solved exactly and strips never interact."""
    report = solve_single_shift(Norm.linf(), points, cfg or StripConfig(2.0, 0.0), backend=backend)
    report.algorithm = "linf"
    return report


def solve_smoothed(
    norm: Norm,
    points,
    num_shifts: int = 6,
    width: Optional[float] = None,
    *,
    threads: Optional[int] = None,
    backend=None,
) -> AlgorithmReport:
    """Best single-shift cover over ``num_shifts`` boundary offsets ``j * width / num_shifts``.

    Ties go to the smallest ``j``. Result is independent of ``threads``.
    """
    if num_shifts < 1:
        raise ValueError("num_shifts must be at least 1")
    w = default_width(norm) if width is None else width
    cfgs = [StripConfig(w, j * w / num_shifts) for j in range(num_shifts)]
    t0 = time.perf_counter()
    xy = sort_by_x(points)

    counts: list[tuple[float, int]] = []
    best: Optional[CoverSolution] = None
    workers = min(worker_count(threads), num_shifts)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            sols = list(pool.map(lambda c: _run_shift(norm, xy, c, backend), cfgs))
    else:
        sols = (_run_shift(norm, xy, c, backend) for c in cfgs)
    for cfg, sol in zip(cfgs, sols):
        counts.append((cfg.boundary_offset, sol.count))
        if best is None or sol.count < best.count:
            best = sol
    return AlgorithmReport(
        solution=best,
        per_shift_counts=counts,
        chosen_shift=best.strip_config.boundary_offset,
        wall_time=time.perf_counter() - t0,
        algorithm="smooth",
    )


def verify_cover(solution: CoverSolution, points, eps: float = DEFAULT_EPS) -> CoverCheck:
    """Check that every point lies in some disk; report the first uncovered point otherwise.

    Uses a k-d tree nearest-center query in the solution's norm, so it shares
    no code with the solvers.
    """
    xy = as_array(points)
    if xy.shape[0] == 0:
        return CoverCheck(True)
    if solution.count == 0:
        return CoverCheck(False, Point(*xy[0].tolist()), 0)
    tree = cKDTree(solution.centers)
    d, _ = tree.query(xy, k=1, p=solution.norm.exponent)
    bad = np.flatnonzero(~(d <= 1.0 + eps))
    if bad.size:
        i = int(bad[0])
        return CoverCheck(False, Point(*xy[i].tolist()), i)
    return CoverCheck(True)


def centers_on_lines(solution: CoverSolution) -> bool:
    """Every center's x equals ``offset + (k + 1/2) * width`` for its strip ``k``, bit for bit."""
    cfg = solution.strip_config
    if cfg is None or solution.count == 0:
        return True
    xs = solution.centers[:, 0]
    k = np.rint((xs - cfg.boundary_offset) / cfg.width - 0.5)
    return bool(np.array_equal(cfg.boundary_offset + (k + 0.5) * cfg.width, xs))
