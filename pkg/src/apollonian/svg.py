"""Deterministic SVG 1.1 rendering of packings."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple
from xml.sax.saxutils import escape

from .geometry import Packing


@dataclass(frozen=True)
class RenderOptions:
    labels: bool = False
    size_px: int = 800
    stroke: str = "#000000"
    fill: str = "none"
    label_min_radius: float = 0.0  # hide labels on disks smaller than this (world units)
    digits: int = 6


def _fmt(x: float, digits: int) -> str:
    s = f"{x:.{digits}f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _bounds(p: Packing) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """``(xmin, ymin, width, height)`` before the margin."""
    if not p.is_strip:
        outer = p.disks[0]
        cx, cy = outer.center
        r = abs(outer.radius)
        return cx - r, cy - r, 2 * r, 2 * r
    # Strip: the lines bound x, the disk window bounds y.
    half = p.disks[0].offset
    ys = [d.center[1] for d in p.disks if not d.is_line]
    rs = [abs(d.radius) for d in p.disks if not d.is_line]
    ymin = min(y - r for y, r in zip(ys, rs))
    ymax = max(y + r for y, r in zip(ys, rs))
    return -half, ymin, 2 * half, ymax - ymin


def render_svg(p: Packing, opts: RenderOptions = RenderOptions()) -> bytes:
    """One ``<circle>`` per disk (``<line>`` for strip boundaries).

    The viewBox is the bounding square of the outer circle (or the strip
    window) widened by a 2% margin; strokes are 0.15% of that extent. The
    y axis is flipped so that the picture has the usual orientation.
    """
    if not p.disks:
        raise ValueError("empty packing")
    xmin, ymin, w, h = _bounds(p)
    extent = float(max(w, h))
    margin = 0.02 * extent
    stroke_w = 0.0015 * extent
    nd = opts.digits
    vb = (float(xmin) - margin, -float(ymin + h) - margin, float(w) + 2 * margin, float(h) + 2 * margin)
    aspect = vb[3] / vb[2]
    out: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{opts.size_px}" height="{round(opts.size_px * aspect)}" '
        f'viewBox="{" ".join(_fmt(v, nd) for v in vb)}">',
        f'<g fill="{escape(opts.fill)}" stroke="{escape(opts.stroke)}" stroke-width="{_fmt(stroke_w, nd)}">',
    ]
    y_lo, y_hi = -float(ymin + h) - margin, -float(ymin) + margin
    for i, d in enumerate(p.disks):
        if d.is_line:
            # Vertical lines x = offset * nx in strip packings.
            x = float(d.offset * d.xdot)
            out.append(f'<line id="d{i}" x1="{_fmt(x, nd)}" y1="{_fmt(y_lo, nd)}" '
                       f'x2="{_fmt(x, nd)}" y2="{_fmt(y_hi, nd)}" data-curvature="0"/>')
            continue
        cx, cy = d.center
        r = abs(d.radius)
        out.append(f'<circle id="d{i}" cx="{_fmt(float(cx), nd)}" cy="{_fmt(-float(cy), nd)}" '
                   f'r="{_fmt(float(r), nd)}" data-curvature="{d.beta}"/>')
    out.append("</g>")
    if opts.labels:
        out.append('<g font-family="sans-serif" text-anchor="middle" dominant-baseline="central" stroke="none">')
        for i, d in enumerate(p.disks):
            if d.is_line or d.beta < 0:
                continue
            r = float(abs(d.radius))
            if r < opts.label_min_radius:
                continue
            cx, cy = d.center
            out.append(f'<text x="{_fmt(float(cx), nd)}" y="{_fmt(-float(cy), nd)}" '
                       f'font-size="{_fmt(0.8 * r, nd)}">{d.beta}</text>')
        out.append("</g>")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
