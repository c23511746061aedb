"""Static SVG drawings of surfaces that carry layout hints."""
from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

from .errors import MissingLayout
from .surface import Surface

PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]
SCALE = 40.0
MARGIN = 30.0


def _period(values: list[float]) -> tuple[float, float, float]:
    """(min, max, period) of one axis; the period adds one grid step to the span."""
    lo, hi = min(values), max(values)
    distinct = sorted(set(values))
    gaps = [b - a for a, b in zip(distinct, distinct[1:]) if b - a > 1e-9]
    step = min(gaps) if gaps else 1.0
    return lo, hi, hi - lo + step


def _clip(p, q, box):
    """Liang-Barsky clip of segment p-q to box (x0, y0, x1, y1); None if outside."""
    x0, y0, x1, y1 = box
    dx, dy = q[0] - p[0], q[1] - p[1]
    t0, t1 = 0.0, 1.0
    for edge_p, edge_q in ((-dx, p[0] - x0), (dx, x1 - p[0]), (-dy, p[1] - y0), (dy, y1 - p[1])):
        if edge_p == 0:
            if edge_q < 0:
                return None
            continue
        t = edge_q / edge_p
        if edge_p < 0:
            t0 = max(t0, t)
        else:
            t1 = min(t1, t)
    if t0 > t1:
        return None
    return ((p[0] + t0 * dx, p[1] + t0 * dy), (p[0] + t1 * dx, p[1] + t1 * dy))


class _Frame:
    def __init__(self, layout: dict[int, tuple[float, float]]):
        xs = [p[0] for p in layout.values()]
        ys = [p[1] for p in layout.values()]
        self.x0, self.x1, self.px = _period(xs)
        self.y0, self.y1, self.py = _period(ys)
        # frame sits half a step outside the outermost vertices
        hx = (self.px - (self.x1 - self.x0)) / 2
        hy = (self.py - (self.y1 - self.y0)) / 2
        self.box = (self.x0 - hx, self.y0 - hy, self.x1 + hx, self.y1 + hy)
        self.layout = layout

    def segments(self, u: int, v: int) -> list[tuple[tuple[float, float], tuple[float, float]]]:
        """One segment, or two halves meeting the frame for a wraparound edge."""
        p, q = self.layout[u], self.layout[v]
        sx = self._shift(q[0] - p[0], self.px)
        sy = self._shift(q[1] - p[1], self.py)
        if sx == 0 and sy == 0:
            return [(p, q)]
        q_img = (q[0] + sx, q[1] + sy)
        p_img = (p[0] - sx, p[1] - sy)
        out = []
        for a, b in ((p, q_img), (p_img, q)):
            seg = _clip(a, b, self.box)
            if seg is not None:
                out.append(seg)
        return out

    @staticmethod
    def _shift(delta: float, period: float) -> float:
        if delta > period / 2:
            return -period
        if delta < -period / 2:
            return period
        return 0.0

    def to_svg(self, pt) -> tuple[float, float]:
        x0, y0, _, y1 = self.box
        # y grows upward in the layout, downward in SVG
        return (MARGIN + (pt[0] - x0) * SCALE, MARGIN + (y1 - pt[1]) * SCALE)

    @property
    def size(self) -> tuple[float, float]:
        x0, y0, x1, y1 = self.box
        return (2 * MARGIN + (x1 - x0) * SCALE, 2 * MARGIN + (y1 - y0) * SCALE + 20)


def _periodic(surface: Surface, layout) -> bool:
    xs = {p[0] for p in layout.values()}
    ys = {p[1] for p in layout.values()}
    return surface.genus == 1 and surface.is_closed and len(xs) * len(ys) == surface.n_vertices


def render_svg(surface: Surface, cycles: Sequence[tuple[str, Sequence[int]]] = ()) -> str:
    """SVG of the surface's graph with each ``(label, vertex_cycle)`` highlighted."""
    layout = surface.layout or {}
    missing = [v for v in range(surface.n_vertices) if v not in layout]
    if missing:
        raise MissingLayout(f"no layout for vertex {missing[0]} ({len(missing)} missing)")
    frame = _Frame(layout)
    if not _periodic(surface, layout):
        # only a full lattice on a torus is read as a periodic drawing
        frame.px = frame.py = float("inf")
    width, height = frame.size
    w_max = max(surface.weights) or 1
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" '
             f'height="{height:.1f}" viewBox="0 0 {width:.1f} {height:.1f}">',
             '<rect width="100%" height="100%" fill="white"/>']
    bx0, by0 = frame.to_svg((frame.box[0], frame.box[3]))
    bx1, by1 = frame.to_svg((frame.box[2], frame.box[1]))
    parts.append(f'<rect x="{bx0:.1f}" y="{by0:.1f}" width="{bx1 - bx0:.1f}" '
                 f'height="{by1 - by0:.1f}" fill="none" stroke="#999" stroke-dasharray="4 3"/>')
    parts.append('<g class="edges" stroke="black" stroke-width="1.5">')
    for e in range(surface.n_edges):
        u, v = surface.endpoints(e)
        opacity = 0.15 + 0.85 * surface.weights[e] / w_max
        for a, b in frame.segments(u, v):
            (x1, y1), (x2, y2) = frame.to_svg(a), frame.to_svg(b)
            parts.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                         f'stroke-opacity="{opacity:.3f}"/>')
    parts.append("</g>")
    for i, (label, verts) in enumerate(cycles):
        color = PALETTE[i % len(PALETTE)]
        parts.append(f'<g class="cycle" stroke="{color}" stroke-width="4" fill="none">')
        polyline = _cycle_polyline(frame, list(verts))
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in (frame.to_svg(p) for p in polyline))
        parts.append(f'<polyline points="{pts}"/>')
        parts.append("</g>")
    parts.append('<g class="vertices" fill="black">')
    for v in range(surface.n_vertices):
        x, y = frame.to_svg(layout[v])
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5"/>')
    parts.append("</g>")
    if cycles:
        parts.append('<g class="legend" font-family="sans-serif" font-size="12">')
        for i, (label, _) in enumerate(cycles):
            color = PALETTE[i % len(PALETTE)]
            x, y = MARGIN + 150 * i, height - 10
            parts.append(f'<line x1="{x:.1f}" y1="{y - 4:.1f}" x2="{x + 18:.1f}" '
                         f'y2="{y - 4:.1f}" stroke="{color}" stroke-width="4"/>')
            parts.append(f'<text x="{x + 24:.1f}" y="{y:.1f}">{escape(label)}</text>')
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _cycle_polyline(frame: _Frame, verts: list[int]) -> list[tuple[float, float]]:
    """The cycle unrolled across the frame: one point per step, ending on the
    image of its first vertex."""
    lay = frame.layout
    pts = [lay[verts[0]]]
    for v in verts[1:] + verts[:1]:
        px, py = pts[-1]
        q = lay[v]
        # pick the image of q nearest to the previous point
        bx = q[0] + round((px - q[0]) / frame.px) * frame.px if frame.px != float("inf") else q[0]
        by = q[1] + round((py - q[1]) / frame.py) * frame.py if frame.py != float("inf") else q[1]
        pts.append((bx, by))
    return pts
