"""Text formats: point lists in, JSON solutions and SVG figures out."""

from __future__ import annotations

import json
import math
import os
import re
import tempfile
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

import numpy as np

from .algorithms import AlgorithmReport
from .geometry import CoverSolution, Norm, Point, as_array
from .strips import StripConfig, strip_indices

_SPLIT = re.compile(r"[,\s]+")


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def parse_points(text: str) -> list[Point]:
    """One ``x y`` or ``x,y`` per line; blank lines and ``#`` comments are skipped."""
    pts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = _SPLIT.split(line)
        if len(fields) != 2:
            raise ParseError(lineno, f"expected two coordinates, got {line!r}")
        try:
            x, y = float(fields[0]), float(fields[1])
        except ValueError:
            raise ParseError(lineno, f"not a number in {line!r}") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ParseError(lineno, f"non-finite coordinate in {line!r}")
        pts.append(Point(x, y))
    return pts


def format_points(points: Iterable[Sequence[float]]) -> str:
    return "".join(f"{_num(x)} {_num(y)}\n" for x, y in as_array(points).tolist())


def _num(v) -> str:
    """17 significant digits, so parsing gives back the same double."""
    if v is None:
        return "null"
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    return "%.17g" % float(v)


def emit_json(report: AlgorithmReport) -> str:
    sol = report.solution
    cfg = sol.strip_config
    lines = [
        "{",
        f'  "norm": {json.dumps(str(sol.norm))},',
        f'  "width": {_num(cfg.width if cfg else None)},',
        f'  "shift": {_num(cfg.boundary_offset if cfg else None)},',
        f'  "count": {sol.count},',
    ]
    disks = [f'    {{"x": {_num(x)}, "y": {_num(y)}}}' for x, y in sol.centers.tolist()]
    lines.append('  "disks": [' + ("\n" + ",\n".join(disks) + "\n  ]," if disks else "],"))
    shifts = [f'    {{"shift": {_num(a)}, "count": {int(c)}}}' for a, c in report.per_shift_counts]
    lines.append('  "per_shift_counts": [' + ("\n" + ",\n".join(shifts) + "\n  ]" if shifts else "]"))
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_json(text: str) -> AlgorithmReport:
    """Inverse of :func:`emit_json` (wall time is not serialized)."""
    obj = json.loads(text)
    norm = Norm.parse(obj["norm"])
    centers = np.array([[d["x"], d["y"]] for d in obj["disks"]], dtype=np.float64).reshape(-1, 2)
    cfg = ids = None
    if obj.get("width") is not None:
        cfg = StripConfig(float(obj["width"]), float(obj["shift"]))
        ids = strip_indices(cfg, centers[:, 0])
    if len(centers) != obj["count"]:
        raise ValueError("count does not match the number of disks")
    sol = CoverSolution(norm, centers, cfg, ids)
    per_shift = [(float(e["shift"]), int(e["count"])) for e in obj.get("per_shift_counts", [])]
    return AlgorithmReport(sol, per_shift, cfg.boundary_offset if cfg else 0.0)


def emit_svg(report: AlgorithmReport, points, scale: float = 40.0) -> str:
    """Standalone SVG: points, disks, dashed restriction lines, solid strip boundaries.

    Non-Euclidean Lp disks are drawn as circles; the caption says so.
    """
    xy = as_array(points)
    sol = report.solution
    cfg = sol.strip_config
    if len(xy):
        x0, y0 = xy.min(axis=0) - 1.0
        x1, y1 = xy.max(axis=0) + 1.0
    else:
        x0, y0, x1, y1 = -1.0, -1.0, 1.0, 1.0
    w, h = x1 - x0, y1 - y0
    sw = 0.02 * max(1.0, max(w, h) / 10)

    def Y(y):
        return y0 + y1 - y  # flip so that +y points up

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w * scale:.1f}" height="{h * scale:.1f}" '
        f'viewBox="{x0:.6g} {y0:.6g} {w:.6g} {h:.6g}">',
        f"<title>{escape(f'{report.algorithm} cover, {sol.norm}, {sol.count} disks')}</title>",
    ]
    if cfg is not None and len(xy):
        a, sw_ = cfg.boundary_offset, cfg.width
        for k in range(math.ceil((x0 - a) / sw_), math.floor((x1 - a) / sw_) + 1):
            bx = a + k * sw_
            out.append(f'<line class="strip-boundary" x1="{bx:.6g}" y1="{y0:.6g}" x2="{bx:.6g}" y2="{y1:.6g}" '
                       f'stroke="#888" stroke-width="{sw:.4g}"/>')
        for k in range(math.ceil((x0 - a) / sw_ - 0.5), math.floor((x1 - a) / sw_ - 0.5) + 1):
            lx = a + (k + 0.5) * sw_
            out.append(f'<line class="restriction-line" x1="{lx:.6g}" y1="{y0:.6g}" x2="{lx:.6g}" y2="{y1:.6g}" '
                       f'stroke="#36c" stroke-width="{sw:.4g}" stroke-dasharray="{4 * sw:.4g} {3 * sw:.4g}"/>')
    square = math.isinf(sol.norm.exponent)
    for cx, cy in sol.centers.tolist():
        if square:
            out.append(f'<rect class="disk" x="{cx - 1:.6g}" y="{Y(cy) - 1:.6g}" width="2" height="2" '
                       f'fill="#c33" fill-opacity="0.12" stroke="#c33" stroke-width="{sw:.4g}"/>')
        else:
            out.append(f'<circle class="disk" cx="{cx:.6g}" cy="{Y(cy):.6g}" r="1" '
                       f'fill="#c33" fill-opacity="0.12" stroke="#c33" stroke-width="{sw:.4g}"/>')
    for px, py in xy.tolist():
        out.append(f'<circle class="point" cx="{px:.6g}" cy="{Y(py):.6g}" r="{1.5 * sw:.4g}" fill="#000"/>')
    if sol.norm.kind == "lp" and not square and sol.norm.exponent != 2.0:
        out.append(f'<text class="caption" x="{x0 + sw:.6g}" y="{y1 - sw:.6g}" font-size="{10 * sw:.4g}">'
                   f"{escape(str(sol.norm))} balls drawn as Euclidean circles</text>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write via a temp file in the target directory so failures leave nothing behind."""
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".udc-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
