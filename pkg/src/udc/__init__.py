"""Unit disk cover with centers restricted to evenly spaced vertical lines."""

from .algorithms import (
    AlgorithmReport,
    CoverCheck,
    centers_on_lines,
    default_width,
    solve_linf,
    solve_single_shift,
    solve_smoothed,
    verify_cover,
)
from .geometry import (
    DEFAULT_EPS,
    CoverSolution,
    Disk,
    InfeasiblePointError,
    Norm,
    Point,
    covers,
    distance,
    segment_half_length,
)
from .kernels import BACKEND
from .strips import (
    Segment,
    StripConfig,
    partition,
    point_to_segment,
    restriction_line_x,
    solve_strip,
    stab_greedy,
    strip_index,
)

__version__ = "0.1.0"
