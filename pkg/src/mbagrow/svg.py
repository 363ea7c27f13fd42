"""Minimal SVG line/scatter plots written as plain text."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence
from xml.sax.saxutils import escape

__all__ = ["Series", "render_plot", "write_plot"]

WIDTH, HEIGHT = 640, 480
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 20, 40, 55
COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#222222", "#9467bd"]


@dataclass
class Series:
    name: str
    x: Sequence[float]
    y: Sequence[float]
    style: str = "points"  # "points", "line" or "dashed"


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    if v == 0:
        return "0"
    if abs(v) >= 1e4 or abs(v) < 1e-2:
        return f"{v:.0e}"
    return f"{v:g}"


def _ticks(lo: float, hi: float, log: bool) -> list[float]:
    if log:
        # positions are exponents
        return [float(e) for e in range(math.floor(lo), math.ceil(hi) + 1) if lo <= e <= hi]
    span = hi - lo
    if span <= 0:
        return [lo]
    step = 10 ** math.floor(math.log10(span / 5))
    for mult in (1, 2, 5, 10):
        if span / (step * mult) <= 6:
            step *= mult
            break
    first = math.ceil(lo / step) * step
    return [first + i * step for i in range(int((hi - first) / step) + 1)]


def render_plot(
    series: Sequence[Series],
    *,
    title: str = "",
    xlabel: str = "",
    ylabel: str = "",
    xlog: bool = False,
    ylog: bool = False,
) -> str:
    """Return an SVG document; non-positive values are dropped on log axes."""
    tx = (lambda v: math.log10(v)) if xlog else (lambda v: v)
    ty = (lambda v: math.log10(v)) if ylog else (lambda v: v)
    pts = []
    for s in series:
        keep = [
            (tx(a), ty(b))
            for a, b in zip(s.x, s.y)
            if math.isfinite(a) and math.isfinite(b) and (a > 0 or not xlog) and (b > 0 or not ylog)
        ]
        pts.append(keep)
    allx = [p[0] for ps in pts for p in ps] or [0.0, 1.0]
    ally = [p[1] for ps in pts for p in ps] or [0.0, 1.0]
    x0, x1 = min(allx), max(allx)
    y0, y1 = min(ally), max(ally)
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5
    pw = WIDTH - MARGIN_L - MARGIN_R
    ph = HEIGHT - MARGIN_T - MARGIN_B

    def px(v: float) -> float:
        return MARGIN_L + (v - x0) / (x1 - x0) * pw

    def py(v: float) -> float:
        return MARGIN_T + ph - (v - y0) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for v in _ticks(x0, x1, xlog):
        X = px(v)
        label = _tick_label(10**v if xlog else v)
        out.append(f'<line x1="{_fmt(X)}" y1="{MARGIN_T + ph}" x2="{_fmt(X)}" y2="{MARGIN_T + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{_fmt(X)}" y="{MARGIN_T + ph + 18}" text-anchor="middle">{label}</text>')
    for v in _ticks(y0, y1, ylog):
        Y = py(v)
        label = _tick_label(10**v if ylog else v)
        out.append(f'<line x1="{MARGIN_L - 5}" y1="{_fmt(Y)}" x2="{MARGIN_L}" y2="{_fmt(Y)}" stroke="black"/>')
        out.append(f'<text x="{MARGIN_L - 8}" y="{_fmt(Y + 4)}" text-anchor="end">{label}</text>')
    for i, (s, ps) in enumerate(zip(series, pts)):
        color = COLORS[i % len(COLORS)]
        if s.style == "points":
            for a, b in ps:
                out.append(
                    f'<circle cx="{_fmt(px(a))}" cy="{_fmt(py(b))}" r="2.5" fill="none" stroke="{color}"/>'
                )
        elif ps:
            dash = ' stroke-dasharray="6,4"' if s.style == "dashed" else ""
            path = " ".join(f"{_fmt(px(a))},{_fmt(py(b))}" for a, b in ps)
            out.append(f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="1.5"{dash}/>')
        ly = MARGIN_T + 16 + 16 * i
        out.append(f'<rect x="{MARGIN_L + 10}" y="{ly - 9}" width="10" height="10" fill="{color}"/>')
        out.append(f'<text x="{MARGIN_L + 26}" y="{ly}">{escape(s.name)}</text>')
    out.append(f'<text x="{WIDTH / 2}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>')
    out.append(f'<text x="{MARGIN_L + pw / 2}" y="{HEIGHT - 12}" text-anchor="middle">{escape(xlabel)}</text>')
    out.append(
        f'<text x="16" y="{MARGIN_T + ph / 2}" text-anchor="middle" '
        f'transform="rotate(-90 16 {MARGIN_T + ph / 2})">{escape(ylabel)}</text>'
    )
    out.append("</svg>\n")
    return "\n".join(out)


def write_plot(path, series: Sequence[Series], **kwargs) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_plot(series, **kwargs))
