"""Seeded instance generators.

All randomness comes from numpy's PCG64 bit generator seeded with the given
integer, consumed through ``Generator.random`` (53-bit doubles in [0, 1)).
Uniform instances draw an ``(n, 2)`` block row by row: point ``i`` is
``(x0 + (x1-x0)*u[i,0], y0 + (y1-y0)*u[i,1])``. Cluster instances first draw
``k`` random centers the same way (unless centers are given), then an
``(n, 2)`` block ``(s, t)``; point ``i`` belongs to cluster ``i % k`` and sits
at radius ``sqrt(s)`` and angle ``2*pi*t`` from its center, which is uniform
over the unit disk.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

import numpy as np

Box = tuple[float, float, float, float]


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def uniform_points(n: int, box: Box, seed: int) -> np.ndarray:
    x0, y0, x1, y1 = box
    u = make_rng(seed).random((n, 2))
    return np.column_stack((x0 + (x1 - x0) * u[:, 0], y0 + (y1 - y0) * u[:, 1]))


def cluster_points(n: int, centers: Optional[Sequence[Sequence[float]]], seed: int,
                   k: int = 1, box: Box = (0.0, 0.0, 20.0, 20.0)) -> np.ndarray:
    """``n`` points spread round-robin over unit disks, each uniformly inside its disk."""
    rng = make_rng(seed)
    if centers is None:
        x0, y0, x1, y1 = box
        u = rng.random((k, 2))
        c = np.column_stack((x0 + (x1 - x0) * u[:, 0], y0 + (y1 - y0) * u[:, 1]))
    else:
        c = np.asarray(centers, dtype=np.float64).reshape(-1, 2)
    if len(c) == 0:
        raise ValueError("clusters need at least one center")
    st = rng.random((n, 2))
    r = np.sqrt(st[:, 0])
    theta = 2.0 * math.pi * st[:, 1]
    owner = c[np.arange(n) % len(c)]
    return owner + np.column_stack((r * np.cos(theta), r * np.sin(theta)))


def gen_instance(kind: str, n: int, seed: int, box: Box = (0.0, 0.0, 20.0, 20.0),
                 centers=None, k: int = 1) -> np.ndarray:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "uniform":
        return uniform_points(n, box, seed)
    if kind == "clusters":
        return cluster_points(n, centers, seed, k=k, box=box)
    raise ValueError(f"unknown instance kind {kind!r}")


def disk_fill(center: Sequence[float], pitch: float = 0.02) -> np.ndarray:
    """Grid of spacing ``pitch`` anchored at ``center``, clipped to the closed unit disk.

    ``1/pitch`` must be an integer; membership is decided on integer offsets so
    the boundary points are kept exactly.
    """
    m = round(1.0 / pitch)
    if not math.isclose(m * pitch, 1.0):
        raise ValueError("pitch must divide 1")
    i, j = np.meshgrid(np.arange(-m, m + 1), np.arange(-m, m + 1), indexing="ij")
    keep = i * i + j * j <= m * m
    return np.column_stack((center[0] + i[keep] / m, center[1] + j[keep] / m))
