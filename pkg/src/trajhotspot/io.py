"""CSV trajectory files and SVG rendering."""

from __future__ import annotations

import sys
from pathlib import Path
from typing import IO, Iterable
from xml.sax.saxutils import quoteattr

from .hotspot import HotspotResult
from .tiling import TilePoints
from .trajectory import Trajectory, validate_trajectory

SVG_POINT_LIMIT = 5000


class CsvParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_csv_lines(lines: Iterable[str]) -> Trajectory:
    """Parse ``t,x,y`` rows; an optional ``t,x,y`` header and ``#`` comments
    are skipped."""
    rows = []
    seen_data = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if not seen_data and [f.lower() for f in fields] == ["t", "x", "y"]:
            seen_data = True
            continue
        seen_data = True
        if len(fields) != 3:
            raise CsvParseError(lineno, f"expected 3 fields (t,x,y), got {len(fields)}")
        try:
            rows.append(tuple(float(f) for f in fields))
        except ValueError:
            raise CsvParseError(lineno, f"not a number in {line!r}") from None
    return validate_trajectory(rows)


def ingest_csv(path: str | Path) -> Trajectory:
    """Read a trajectory CSV; ``"-"`` reads standard input."""
    if str(path) == "-":
        return parse_csv_lines(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return parse_csv_lines(fh)


def write_csv(traj: Trajectory, out: IO[str]) -> None:
    # repr round-trips doubles exactly
    out.write("t,x,y\n")
    for t, x, y in zip(traj.t.tolist(), traj.x.tolist(), traj.y.tolist()):
        out.write(f"{t!r},{x!r},{y!r}\n")


def render_svg(traj: Trajectory, result: HotspotResult, points: TilePoints | None = None) -> str:
    sq = result.square
    x_lo, y_lo, x_hi, y_hi = traj.bounds()
    x_lo, y_lo = min(x_lo, sq.min_x), min(y_lo, sq.min_y)
    x_hi, y_hi = max(x_hi, sq.max_x), max(y_hi, sq.max_y)
    pad = 0.05 * max(x_hi - x_lo, y_hi - y_lo, sq.side)
    x_lo, y_lo, x_hi, y_hi = x_lo - pad, y_lo - pad, x_hi + pad, y_hi + pad
    stroke = (x_hi - x_lo + y_hi - y_lo) / 800
    # SVG y grows downwards; flip so the plot reads like the plane
    def fy(y: float) -> float:
        return -y

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{x_lo!r} {fy(y_hi)!r} {x_hi - x_lo!r} {y_hi - y_lo!r}">',
    ]
    coords = " ".join(f"{x!r},{fy(y)!r}" for x, y in zip(traj.x.tolist(), traj.y.tolist()))
    out.append(
        f'<polyline points={quoteattr(coords)} fill="none" stroke="steelblue" '
        f'stroke-width="{stroke!r}"/>'
    )
    if points is not None:
        if len(points) <= SVG_POINT_LIMIT:
            r = stroke * 1.5
            out.append('<g fill="darkorange">')
            for x, y in zip(points.x.tolist(), points.y.tolist()):
                out.append(f'<circle cx="{x!r}" cy="{fy(y)!r}" r="{r!r}"/>')
            out.append("</g>")
        else:
            out.append(f"<!-- {len(points)} tile points omitted (limit {SVG_POINT_LIMIT}) -->")
    out.append(
        f'<rect x="{sq.min_x!r}" y="{fy(sq.max_y)!r}" width="{sq.side!r}" height="{sq.side!r}" '
        f'fill="crimson" fill-opacity="0.2" stroke="crimson" stroke-width="{stroke!r}"/>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(traj: Trajectory, result: HotspotResult, path: str | Path,
             points: TilePoints | None = None) -> None:
    Path(path).write_text(render_svg(traj, result, points), encoding="utf-8")

