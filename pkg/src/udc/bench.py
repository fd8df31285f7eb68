"""Timing harness for the cover algorithms."""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .algorithms import solve_linf, solve_single_shift, solve_smoothed
from .geometry import Norm
from .generate import uniform_points

CSV_HEADER = "n,algorithm,norm,seed,count,millis"


@dataclass(frozen=True)
class BenchRecord:
    n: int
    norm: Norm
    algorithm: str
    wall_time: float
    disk_count: int
    seed: int

    def csv(self) -> str:
        return f"{self.n},{self.algorithm},{self.norm},{self.seed},{self.disk_count},{self.wall_time * 1e3:.3f}"


def bench_instance(n: int, seed: int):
    """Uniform points at unit density: the box side is ``sqrt(n)``."""
    side = math.sqrt(max(n, 1))
    return uniform_points(n, (0.0, 0.0, side, side), seed)


def run_solver(algorithm: str, norm: Norm, xy, backend: Optional[str] = None, threads: Optional[int] = None):
    if algorithm == "smooth":
        return solve_smoothed(norm, xy, threads=threads, backend=backend)
    if algorithm == "single":
        return solve_single_shift(norm, xy, backend=backend)
    if algorithm == "linf":
        return solve_linf(xy, backend=backend)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def run_bench(sizes, algorithm: str, norm: Norm, repeats: int = 3, seed: int = 0,
              backend: Optional[str] = None) -> list[BenchRecord]:
    """Time ``repeats`` solves per size; instance generation is not timed."""
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    out = []
    for n in sizes:
        xy = bench_instance(n, seed)
        for _ in range(repeats):
            t0 = time.perf_counter()
            rep = run_solver(algorithm, norm, xy, backend=backend)
            dt = time.perf_counter() - t0
            out.append(BenchRecord(n, norm, algorithm, dt, rep.count, seed))
    return out


def median_times(records: list[BenchRecord]) -> dict[int, float]:
    by_n: dict[int, list[float]] = {}
    for r in records:
        by_n.setdefault(r.n, []).append(r.wall_time)
    return {n: statistics.median(ts) for n, ts in by_n.items()}


def compare_backends(sizes, algorithm: str = "smooth", norm: Optional[Norm] = None,
                     repeats: int = 3, seed: int = 0) -> list[tuple[int, str, float, int]]:
    """Median time per (size, backend); rows are ``(n, backend, seconds, count)``."""
    norm = norm or Norm.l2()
    rows = []
    for name in kernels.BACKENDS:
        recs = run_bench(sizes, algorithm, norm, repeats, seed, backend=name)
        med = median_times(recs)
        counts = {r.n: r.disk_count for r in recs}
        rows.extend((n, name, med[n], counts[n]) for n in sizes)
    return sorted(rows)
