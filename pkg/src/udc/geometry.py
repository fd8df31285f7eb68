"""Norm-parametric planar primitives: points, unit balls, coverage predicates.

Every ball here has radius 1. A norm is one of L2, Linf or a general Lp with
``p >= 1``; exponents above :data:`P_CAP` are treated as Linf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, NamedTuple, Optional, Sequence

import numpy as np

if TYPE_CHECKING:  # pragma: no cover
    from .strips import StripConfig

DEFAULT_EPS = 1e-9
P_CAP = 1e6


class InfeasiblePointError(ValueError):
    """A point lies more than one unit (horizontally) from the line that should cover it."""


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Norm:
    kind: str
    p: Optional[float] = None

    def __post_init__(self):
        if self.kind not in ("l2", "linf", "lp"):
            raise ValueError(f"unknown norm kind {self.kind!r}")
        if self.kind == "lp":
            if self.p is None or not math.isfinite(self.p) or self.p < 1:
                raise ValueError(f"Lp norm needs a finite p >= 1, got {self.p!r}")
        elif self.p is not None:
            raise ValueError(f"{self.kind} takes no exponent")

    @classmethod
    def l2(cls) -> "Norm":
        return cls("l2")

    @classmethod
    def linf(cls) -> "Norm":
        return cls("linf")

    @classmethod
    def lp(cls, p: float) -> "Norm":
        return cls("lp", float(p))

    @classmethod
    def parse(cls, text: str) -> "Norm":
        """Parse ``l2``, ``linf`` or ``lp:P``."""
        t = text.strip().lower()
        if t == "l2":
            return cls.l2()
        if t in ("linf", "inf", "max"):
            return cls.linf()
        if t.startswith("lp:"):
            try:
                p = float(t[3:])
            except ValueError:
                raise ValueError(f"bad Lp exponent in {text!r}") from None
            return cls.lp(p)
        raise ValueError(f"unknown norm {text!r} (expected l2, linf or lp:P)")

    @property
    def exponent(self) -> float:
        """Effective exponent: 2 for L2, inf for Linf and for Lp beyond the cap."""
        if self.kind == "l2":
            return 2.0
        if self.kind == "linf" or self.p > P_CAP:
            return math.inf
        return self.p

    def __str__(self) -> str:
        if self.kind == "lp":
            return f"lp:{self.p:g}"
        return self.kind


@dataclass(frozen=True)
class Disk:
    center: Point
    norm: Norm


@dataclass
class CoverSolution:
    """Unit disks chosen by an algorithm.

    Centers are kept as an ``(k, 2)`` float array so that large solutions do
    not materialize one object per disk; :attr:`disks` builds them on demand.
    ``strip_ids`` holds the strip index of each disk when a strip
    configuration produced the solution.
    """

    norm: Norm
    centers: np.ndarray
    strip_config: Optional["StripConfig"] = None
    strip_ids: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        self.centers = np.asarray(self.centers, dtype=np.float64).reshape(-1, 2)

    @property
    def count(self) -> int:
        return int(self.centers.shape[0])

    @property
    def disks(self) -> list[Disk]:
        return [Disk(Point(float(x), float(y)), self.norm) for x, y in self.centers]

    def per_strip_counts(self) -> dict[int, int]:
        if self.strip_ids is None:
            return {}
        ks, counts = np.unique(self.strip_ids, return_counts=True)
        return {int(k): int(c) for k, c in zip(ks, counts)}


def as_array(points: Iterable[Sequence[float]] | np.ndarray) -> np.ndarray:
    """Coerce points to a finite ``(n, 2)`` float64 array."""
    arr = np.asarray(points if isinstance(points, np.ndarray) else list(points), dtype=np.float64)
    arr = arr.reshape(-1, 2)
    if not np.isfinite(arr).all():
        raise ValueError("points must have finite coordinates")
    return arr


def _lp(ax: float, ay: float, p: float) -> float:
    m = max(ax, ay)
    if m == 0.0:
        return 0.0
    # scale by the max coordinate so large p cannot overflow
    return m * ((ax / m) ** p + (ay / m) ** p) ** (1.0 / p)


def distance(norm: Norm, a: Sequence[float], b: Sequence[float]) -> float:
    ax, ay = abs(a[0] - b[0]), abs(a[1] - b[1])
    p = norm.exponent
    if p == 2.0:
        return math.hypot(ax, ay)
    if math.isinf(p):
        return max(ax, ay)
    return _lp(ax, ay, p)


def distances(norm: Norm, dx: np.ndarray, dy: np.ndarray) -> np.ndarray:
    """Vectorized :func:`distance` on coordinate differences."""
    ax, ay = np.abs(dx), np.abs(dy)
    p = norm.exponent
    if p == 2.0:
        return np.hypot(ax, ay)
    if math.isinf(p):
        return np.maximum(ax, ay)
    m = np.maximum(ax, ay)
    safe = np.where(m > 0, m, 1.0)
    return np.where(m > 0, m * ((ax / safe) ** p + (ay / safe) ** p) ** (1.0 / p), 0.0)


def covers(disk: Disk, p: Sequence[float], eps: float = DEFAULT_EPS) -> bool:
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    return distance(disk.norm, disk.center, p) <= 1.0 + eps


def segment_half_length(norm: Norm, dx: float) -> float:
    """Half the vertical extent of the unit ball around a point, cut at horizontal offset ``dx``.

    A center at vertical offset ``t`` from the point covers it iff ``|t| <= h``.
    """
    a = abs(dx)
    if not a <= 1.0:
        raise InfeasiblePointError(f"horizontal offset {dx!r} exceeds the unit radius")
    p = norm.exponent
    if math.isinf(p):
        return 1.0
    if p == 2.0:
        return math.sqrt((1.0 - a) * (1.0 + a))
    return (1.0 - a**p) ** (1.0 / p)


def half_lengths(norm: Norm, dx: np.ndarray) -> np.ndarray:
    """Vectorized :func:`segment_half_length`."""
    a = np.abs(dx)
    if a.size and not (a <= 1.0).all():
        bad = float(dx[np.argmax(~(a <= 1.0))])
        raise InfeasiblePointError(f"horizontal offset {bad!r} exceeds the unit radius")
    p = norm.exponent
    if math.isinf(p):
        return np.ones_like(a)
    if p == 2.0:
        return np.sqrt((1.0 - a) * (1.0 + a))
    return (1.0 - a**p) ** (1.0 / p)
