"""Exact solvers for small instances.

Optimal unconstrained covers come from a finite candidate set of centers
(input points plus pairwise unit-circle intersections for L2, pinned squares
for Linf) followed by branch-and-bound set cover. Any covering disk can be
slid onto such a candidate without losing a point, so the candidate optimum
is the true optimum.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .geometry import DEFAULT_EPS, CoverSolution, Norm, Point, as_array, distances
from .strips import Segment

DEFAULT_LIMIT = 16
STAB_LIMIT = 12
MERGE_TOL = 1e-9


class OracleLimitError(ValueError):
    """Instance too large for exhaustive search."""


@dataclass
class CandidateSet:
    norm: Norm
    centers: list[Point]
    masks: list[int]
    n_points: int

    @property
    def coverage(self) -> list[frozenset[int]]:
        return [frozenset(i for i in range(self.n_points) if m >> i & 1) for m in self.masks]


def _circle_intersections(xy: np.ndarray) -> list[tuple[float, float]]:
    out = []
    pts = xy.tolist()
    for i, (ax, ay) in enumerate(pts):
        for bx, by in pts[i + 1 :]:
            dx, dy = bx - ax, by - ay
            d = math.hypot(dx, dy)
            if d == 0.0 or d > 2.0 + MERGE_TOL:
                continue
            mx, my = (ax + bx) / 2, (ay + by) / 2
            h = math.sqrt(max(0.0, 1.0 - (d / 2) ** 2))
            ux, uy = -dy / d, dx / d
            out.append((mx + h * ux, my + h * uy))
            out.append((mx - h * ux, my - h * uy))
    return out


def _merge(cands: list[tuple[float, float]]) -> list[tuple[float, float]]:
    kept: list[tuple[float, float]] = []
    for c in cands:
        if not any(abs(c[0] - k[0]) <= MERGE_TOL and abs(c[1] - k[1]) <= MERGE_TOL for k in kept):
            kept.append(c)
    return kept


def generate_candidates(norm: Norm, points, limit: int = DEFAULT_LIMIT, eps: float = DEFAULT_EPS) -> CandidateSet:
    xy = as_array(points)
    n = len(xy)
    if n > limit:
        raise OracleLimitError(f"{n} points exceeds the oracle limit of {limit}")
    if norm.kind == "l2":
        raw = [tuple(p) for p in xy.tolist()] + _circle_intersections(xy)
    elif math.isinf(norm.exponent):
        raw = [(p[0] + 1.0, q[1] - 1.0) for p in xy.tolist() for q in xy.tolist()]
    else:
        raise ValueError(f"oracle supports l2 and linf only, not {norm}")
    cands = _merge(raw)
    masks = []
    for cx, cy in cands:
        inside = distances(norm, xy[:, 0] - cx, xy[:, 1] - cy) <= 1.0 + eps
        masks.append(sum(1 << i for i in np.flatnonzero(inside).tolist()))
    return CandidateSet(norm, [Point(x, y) for x, y in cands], masks, n)


def _maximal(masks: Sequence[int]) -> list[int]:
    """Indices of candidates whose coverage is not strictly contained in another's (one per distinct mask)."""
    order = sorted(range(len(masks)), key=lambda i: (-bin(masks[i]).count("1"), i))
    keep: list[int] = []
    for i in order:
        m = masks[i]
        if m and not any(m & masks[j] == m for j in keep):
            keep.append(i)
    return keep


def _greedy(masks: list[int], full: int) -> list[int]:
    chosen, covered = [], 0
    while covered != full:
        j = max(range(len(masks)), key=lambda t: bin(masks[t] & ~covered).count("1"))
        chosen.append(j)
        covered |= masks[j]
    return chosen


def set_cover_exact(cands: CandidateSet) -> CoverSolution:
    """Minimum-cardinality subset of candidates covering every point (branch and bound)."""
    n = cands.n_points
    full = (1 << n) - 1
    if n == 0:
        return CoverSolution(cands.norm, np.empty((0, 2)))
    keep = _maximal(cands.masks)
    masks = [cands.masks[i] for i in keep]
    if _union(masks) != full:
        raise ValueError("candidate set does not cover every point")
    by_elem = [[j for j, m in enumerate(masks) if m >> e & 1] for e in range(n)]
    for lst in by_elem:
        lst.sort(key=lambda j: -bin(masks[j]).count("1"))

    best = _greedy(masks, full)

    def search(covered: int, chosen: list[int]):
        nonlocal best
        if covered == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        rest = full & ~covered
        gain = max(bin(m & rest).count("1") for m in masks)
        if len(chosen) + -(-bin(rest).count("1") // gain) >= len(best):
            return
        # branch on the uncovered point with the fewest covering candidates
        e = min((i for i in range(n) if rest >> i & 1), key=lambda i: len(by_elem[i]))
        for j in by_elem[e]:
            chosen.append(j)
            search(covered | masks[j], chosen)
            chosen.pop()

    search(0, [])
    centers = [cands.centers[keep[j]] for j in best]
    return CoverSolution(cands.norm, np.array(centers, dtype=np.float64))


def _union(masks: Iterable[int]) -> int:
    acc = 0
    for m in masks:
        acc |= m
    return acc


def solve_exact(norm: Norm, points, limit: int = DEFAULT_LIMIT, eps: float = DEFAULT_EPS) -> CoverSolution:
    return set_cover_exact(generate_candidates(norm, points, limit, eps))


def has_cover_of_size(cands: CandidateSet, size: int) -> bool:
    """Exhaustively test whether ``size`` candidates can cover every point.

    Only maximal coverage sets are enumerated; swapping a candidate for one
    that dominates it never breaks a cover.
    """
    full = (1 << cands.n_points) - 1
    masks = [cands.masks[i] for i in _maximal(cands.masks)]
    if full == 0:
        return True
    for combo in itertools.combinations(masks, size):
        if _union(combo) == full:
            return True
    return False


def min_stabbing_bruteforce(segments: Iterable[Segment], limit: int = STAB_LIMIT) -> int:
    """Fewest ordinates hitting every segment, by trying subsets of lower endpoints in size order."""
    segs = [tuple(s)[:2] for s in segments]
    if len(segs) > limit:
        raise OracleLimitError(f"{len(segs)} segments exceeds the brute-force limit of {limit}")
    ords = sorted({lo for lo, _ in segs})
    for size in range(len(ords) + 1):
        for combo in itertools.combinations(ords, size):
            if all(any(lo <= t <= hi for t in combo) for lo, hi in segs):
                return size
    raise AssertionError("unreachable: all lower endpoints always stab")
