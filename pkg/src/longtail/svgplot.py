"""Minimal self-contained SVG rendering for log-log plots.

Only what the bundled experiments need: decade grid lines on both axes,
point markers, optional connecting lines, and a legend. Output is a plain
SVG string built deterministically from the data, so identical inputs give
byte-identical files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#e377c2",
    "#17becf",
)

MARGIN_LEFT = 70.0
MARGIN_RIGHT = 24.0
MARGIN_TOP = 40.0
MARGIN_BOTTOM = 52.0


@dataclass
class Series:
    label: str
    x: Sequence[float]
    y: Sequence[float]
    marker: bool = True
    line: bool = False


def _decade_range(values: list[float]) -> tuple[int, int]:
    lo = math.floor(math.log10(min(values)))
    hi = math.ceil(math.log10(max(values)))
    if lo == hi:
        lo, hi = lo - 1, hi + 1
    return lo, hi


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(exponent: int) -> str:
    return f"1e{exponent}"


def loglog_svg(
    series: Sequence[Series],
    title: str,
    x_label: str,
    y_label: str,
    width: int = 720,
    height: int = 540,
) -> str:
    """Render series with positive coordinates as a log-log SVG plot."""
    xs = [float(v) for s in series for v in s.x]
    ys = [float(v) for s in series for v in s.y]
    if not xs or min(xs) <= 0 or min(ys) <= 0:
        raise ValueError("log-log plot needs at least one point and all positive coordinates")

    x_lo, x_hi = _decade_range(xs)
    y_lo, y_hi = _decade_range(ys)
    plot_w = width - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = height - MARGIN_TOP - MARGIN_BOTTOM

    def px(v: float) -> float:
        return MARGIN_LEFT + (math.log10(v) - x_lo) / (x_hi - x_lo) * plot_w

    def py(v: float) -> float:
        return MARGIN_TOP + plot_h - (math.log10(v) - y_lo) / (y_hi - y_lo) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{_fmt(width / 2)}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{title}</text>',
    ]

    # decade grid and tick labels
    for exponent in range(x_lo, x_hi + 1):
        x = px(10.0**exponent)
        out.append(
            f'<line x1="{_fmt(x)}" y1="{_fmt(MARGIN_TOP)}" x2="{_fmt(x)}" '
            f'y2="{_fmt(MARGIN_TOP + plot_h)}" stroke="#dddddd" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(x)}" y="{_fmt(MARGIN_TOP + plot_h + 18)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{_tick_label(exponent)}</text>'
        )
    for exponent in range(y_lo, y_hi + 1):
        y = py(10.0**exponent)
        out.append(
            f'<line x1="{_fmt(MARGIN_LEFT)}" y1="{_fmt(y)}" x2="{_fmt(MARGIN_LEFT + plot_w)}" '
            f'y2="{_fmt(y)}" stroke="#dddddd" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(MARGIN_LEFT - 8)}" y="{_fmt(y + 4)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{_tick_label(exponent)}</text>'
        )

    # frame and axis labels
    out.append(
        f'<rect x="{_fmt(MARGIN_LEFT)}" y="{_fmt(MARGIN_TOP)}" width="{_fmt(plot_w)}" '
        f'height="{_fmt(plot_h)}" fill="none" stroke="black" stroke-width="1"/>'
    )
    out.append(
        f'<text x="{_fmt(MARGIN_LEFT + plot_w / 2)}" y="{_fmt(height - 12)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">{x_label}</text>'
    )
    out.append(
        f'<text x="18" y="{_fmt(MARGIN_TOP + plot_h / 2)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 18 {_fmt(MARGIN_TOP + plot_h / 2)})">{y_label}</text>'
    )

    for index, s in enumerate(series):
        color = PALETTE[index % len(PALETTE)]
        points = [(px(float(x)), py(float(y))) for x, y in zip(s.x, s.y)]
        if s.line and len(points) > 1:
            path = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
            out.append(
                f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="1.5"/>'
            )
        if s.marker:
            for x, y in points:
                out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="{color}"/>')

    # legend, top right inside the frame
    legend_x = MARGIN_LEFT + plot_w - 170
    legend_y = MARGIN_TOP + 12
    box_h = 18 * len(series) + 8
    out.append(
        f'<rect x="{_fmt(legend_x - 8)}" y="{_fmt(legend_y - 12)}" width="178" '
        f'height="{_fmt(box_h)}" fill="white" stroke="#999999" stroke-width="0.5"/>'
    )
    for index, s in enumerate(series):
        color = PALETTE[index % len(PALETTE)]
        y = legend_y + 18 * index
        out.append(f'<circle cx="{_fmt(legend_x)}" cy="{_fmt(y)}" r="3" fill="{color}"/>')
        out.append(
            f'<text x="{_fmt(legend_x + 10)}" y="{_fmt(y + 4)}" '
            f'font-family="sans-serif" font-size="11">{s.label}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"
