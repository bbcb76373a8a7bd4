"""Static SVG emitters: swatch grid, sunburst wheel and icicle layout.

Output is byte-stable for fixed inputs: no timestamps, no randomness,
fixed-precision coordinates. Out-of-gamut nodes are filled with their
clamped color and marked with a thin warning stroke.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .hierarchy import Hierarchy
from .treecolors import (
    PaletteAssignment,
    ensure_covers,
    shrink_range,
    HueRange,
)

LAYOUTS = ("swatch", "sunburst", "icicle")
WARNING_STROKE = "#ff2a2a"


@dataclass(frozen=True)
class RenderSpec:
    layout: str = "sunburst"
    size: int = 512
    background: str = "#ffffff"
    label: bool = False
    show_gaps: bool = False

    def __post_init__(self):
        if self.layout not in LAYOUTS:
            raise ValueError(f"unknown layout {self.layout!r}")
        if not 64 <= self.size <= 4096:
            raise ValueError(f"size {self.size} outside [64, 4096]")


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def _svg(width: float, height: float, body: list[str], background: str) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">\n'
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="{background}"/>\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"


def _stroke_attrs(in_gamut: bool) -> str:
    if in_gamut:
        return 'stroke="none"'
    return f'stroke="{WARNING_STROKE}" stroke-width="1.5"'


def render_swatch(p: PaletteAssignment, spec: RenderSpec) -> str:
    """Pre-order grid of tiles, one per node, optionally labeled."""
    if not p.entries:
        raise ValueError("empty palette")
    n = len(p.entries)
    cols = math.ceil(math.sqrt(n))
    rows = math.ceil(n / cols)
    tile = spec.size / cols
    body = []
    for i, e in enumerate(p.entries):
        x = (i % cols) * tile
        y = (i // cols) * tile
        body.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(tile)}" '
            f'height="{_fmt(tile)}" fill="{e.clamped_hex}" {_stroke_attrs(e.in_gamut)}/>'
        )
        if spec.label:
            font = max(tile / 8.0, 6.0)
            body.append(
                f'<text x="{_fmt(x + 2)}" y="{_fmt(y + font + 2)}" '
                f'font-size="{_fmt(font)}" font-family="monospace">'
                f"{escape(e.path)} {e.clamped_hex}</text>"
            )
    return _svg(spec.size, rows * tile, body, spec.background)


def _node_extent(p: PaletteAssignment, e, spec: RenderSpec) -> HueRange:
    rng = HueRange(e.range_start, e.range_width, circular=e.depth == 0)
    if spec.show_gaps and e.depth > 0:
        return shrink_range(rng, p.config.hue_fraction)
    return rng


def _annular_sector(
    cx: float, cy: float, ri: float, ro: float, a0: float, a1: float
) -> str:
    # angles in radians, counterclockwise from 3 o'clock; SVG y grows down
    def pt(a: float, r: float) -> tuple[float, float]:
        return cx + r * math.cos(a), cy - r * math.sin(a)

    extent = a1 - a0
    if extent >= 2.0 * math.pi - 1e-9:
        # full ring: two half arcs per radius
        mid = a0 + math.pi
        x0o, y0o = pt(a0, ro)
        xmo, ymo = pt(mid, ro)
        x0i, y0i = pt(a0, ri)
        xmi, ymi = pt(mid, ri)
        outer = (
            f"M {_fmt(x0o)} {_fmt(y0o)} "
            f"A {_fmt(ro)} {_fmt(ro)} 0 1 0 {_fmt(xmo)} {_fmt(ymo)} "
            f"A {_fmt(ro)} {_fmt(ro)} 0 1 0 {_fmt(x0o)} {_fmt(y0o)} Z"
        )
        if ri <= 1e-9:
            return outer
        inner = (
            f"M {_fmt(x0i)} {_fmt(y0i)} "
            f"A {_fmt(ri)} {_fmt(ri)} 0 1 1 {_fmt(xmi)} {_fmt(ymi)} "
            f"A {_fmt(ri)} {_fmt(ri)} 0 1 1 {_fmt(x0i)} {_fmt(y0i)} Z"
        )
        return outer + " " + inner
    laf = 1 if extent > math.pi else 0
    x0, y0 = pt(a0, ro)
    x1, y1 = pt(a1, ro)
    x2, y2 = pt(a1, ri)
    x3, y3 = pt(a0, ri)
    return (
        f"M {_fmt(x0)} {_fmt(y0)} "
        f"A {_fmt(ro)} {_fmt(ro)} 0 {laf} 0 {_fmt(x1)} {_fmt(y1)} "
        f"L {_fmt(x2)} {_fmt(y2)} "
        f"A {_fmt(ri)} {_fmt(ri)} 0 {laf} 1 {_fmt(x3)} {_fmt(y3)} Z"
    )


def render_sunburst(h: Hierarchy, p: PaletteAssignment, spec: RenderSpec) -> str:
    """Annular wheel: depth-d nodes occupy annulus d, angle = assigned range."""
    ensure_covers(p, h)
    root = p.by_path[h.root.path]
    root_start, root_width = root.range_start, root.range_width
    rings = h.max_depth + 1
    cx = cy = spec.size / 2.0
    outer_r = spec.size / 2.0 - 2.0

    def angle(deg: float) -> float:
        return (deg - root_start) / root_width * 2.0 * math.pi

    body = []
    for node in h:
        e = p.by_path[node.path]
        ext = _node_extent(p, e, spec)
        ri = outer_r * node.depth / rings
        ro = outer_r * (node.depth + 1) / rings
        if node.depth == 0:
            body.append(
                f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(ro)}" '
                f'fill="{e.clamped_hex}" {_stroke_attrs(e.in_gamut)}/>'
            )
            continue
        a0 = angle(ext.start)
        a1 = angle(ext.start + ext.width)
        path = _annular_sector(cx, cy, ri, ro, a0, a1)
        body.append(
            f'<path d="{path}" fill-rule="evenodd" fill="{e.clamped_hex}" '
            f"{_stroke_attrs(e.in_gamut)}/>"
        )
        if spec.label:
            am = 0.5 * (a0 + a1)
            rm = 0.5 * (ri + ro)
            body.append(
                f'<text x="{_fmt(cx + rm * math.cos(am))}" '
                f'y="{_fmt(cy - rm * math.sin(am))}" font-size="10" '
                f'font-family="monospace" text-anchor="middle">'
                f"{escape(node.name)}</text>"
            )
    return _svg(spec.size, spec.size, body, spec.background)


def render_icicle(h: Hierarchy, p: PaletteAssignment, spec: RenderSpec) -> str:
    """Cartesian analogue of the sunburst: width shares follow hue ranges."""
    ensure_covers(p, h)
    root = p.by_path[h.root.path]
    root_start, root_width = root.range_start, root.range_width
    rows = h.max_depth + 1
    row_h = spec.size / (2.0 * rows)  # 2:1 aspect reads better for icicles

    def x_of(deg: float) -> float:
        return (deg - root_start) / root_width * spec.size

    body = []
    for node in h:
        e = p.by_path[node.path]
        ext = (
            HueRange(e.range_start, e.range_width, circular=node.depth == 0)
            if node.depth == 0
            else _node_extent(p, e, spec)
        )
        x0 = x_of(ext.start)
        w = ext.width / root_width * spec.size
        y = node.depth * row_h
        body.append(
            f'<rect x="{_fmt(x0)}" y="{_fmt(y)}" width="{_fmt(w)}" '
            f'height="{_fmt(row_h)}" fill="{e.clamped_hex}" {_stroke_attrs(e.in_gamut)}/>'
        )
        if spec.label:
            body.append(
                f'<text x="{_fmt(x0 + 3)}" y="{_fmt(y + row_h / 2)}" '
                f'font-size="10" font-family="monospace">{escape(node.name)}</text>'
            )
    return _svg(spec.size, rows * row_h, body, spec.background)


def render(h: Hierarchy, p: PaletteAssignment, spec: RenderSpec) -> str:
    if spec.layout == "swatch":
        return render_swatch(p, spec)
    if spec.layout == "sunburst":
        return render_sunburst(h, p, spec)
    return render_icicle(h, p, spec)
