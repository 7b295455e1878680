"""SVG rendering of disk images under a map.

Output is deterministic: fixed element order (circles by radius, then
rays by angle), fixed 3-decimal pixel coordinates, no timestamps.  The
same map and config always produce byte-identical documents.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .core import LayeredMap

_SVG_OPEN = ('<?xml version="1.0" encoding="UTF-8"?>\n'
             '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
             'width="{c}" height="{c}" viewBox="0 0 {c} {c}">')


@dataclasses.dataclass(frozen=True)
class RenderConfig:
    circles: int = 12
    rays: int = 24
    samples_per_curve: int = 720
    r_max: float = 0.999
    canvas: int = 800
    stroke: str = "#46629e"
    stroke_width: float = 1.0
    boundary_stroke: str = "#16243f"
    boundary_width: float = 2.0

    def __post_init__(self):
        for field in ("circles", "rays", "samples_per_curve", "canvas"):
            if getattr(self, field) < 2:
                raise ValueError(f"{field} must be at least 2")
        if not 0.0 < self.r_max < 1.0:
            raise ValueError("r_max must lie in (0, 1)")
        if self.stroke_width <= 0 or self.boundary_width <= 0:
            raise ValueError("stroke widths must be positive")


def sample_circle(F: LayeredMap, r: float, samples: int) -> np.ndarray:
    """Image of the circle |z| = r at ``samples`` equally spaced angles."""
    theta = 2.0 * math.pi * np.arange(samples) / samples
    return F(r * np.exp(1j * theta))


def sample_ray(F: LayeredMap, angle: float, r_max: float, samples: int) -> np.ndarray:
    t = np.linspace(0.0, r_max, samples)
    return F(t * np.exp(1j * angle))


def _curves(F: LayeredMap, cfg: RenderConfig):
    """Yield (points, is_boundary) in drawing order; circle curves closed."""
    n = cfg.samples_per_curve
    for i in range(cfg.circles):
        r = cfg.r_max * (i + 1) / cfg.circles
        w = sample_circle(F, r, n)
        yield np.append(w, w[:1]), i == cfg.circles - 1
    for k in range(cfg.rays):
        yield sample_ray(F, 2.0 * math.pi * k / cfg.rays, cfg.r_max, n), False


def render_disk_image(F: LayeredMap, cfg: RenderConfig | None = None) -> str:
    """Render the disk image as an SVG 1.1 document (one polyline per curve)."""
    cfg = cfg or RenderConfig()
    curves = list(_curves(F, cfg))
    xs = np.concatenate([w.real for w, _ in curves])
    ys = np.concatenate([w.imag for w, _ in curves])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    # 5% margin each side, uniform scale, image centered on the canvas.
    span = max(x1 - x0, y1 - y0, 1e-9) * 1.1
    scale = cfg.canvas / span
    cx, cy = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
    half = 0.5 * cfg.canvas

    parts = [_SVG_OPEN.format(c=cfg.canvas)]
    for w, is_boundary in curves:
        px = (w.real - cx) * scale + half
        py = (cy - w.imag) * scale + half  # SVG y axis points down
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in zip(px, py))
        stroke = cfg.boundary_stroke if is_boundary else cfg.stroke
        width = cfg.boundary_width if is_boundary else cfg.stroke_width
        parts.append(f'<polyline fill="none" stroke="{stroke}" '
                     f'stroke-width="{width}" points="{coords}"/>')
    parts.append("</svg>\n")
    return "\n".join(parts)


def _segments_cross(p1, p2, q1, q2) -> bool:
    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def on_segment(a, b, c):
        return (min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))

    d1 = cross(q1, q2, p1)
    d2 = cross(q1, q2, p2)
    d3 = cross(p1, p2, q1)
    d4 = cross(p1, p2, q2)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 != 0 and d2 != 0 \
            and d3 != 0 and d4 != 0:
        return True
    if d1 == 0 and on_segment(q1, q2, p1):
        return True
    if d2 == 0 and on_segment(q1, q2, p2):
        return True
    if d3 == 0 and on_segment(p1, p2, q1):
        return True
    if d4 == 0 and on_segment(p1, p2, q2):
        return True
    return False


def polyline_is_simple(points: np.ndarray, closed: bool = False) -> bool:
    """Check a polyline for self-intersection by an x-sorted segment sweep.

    Adjacent segments share an endpoint by construction and are not
    counted; everything else touching or crossing is.  Exact float
    arithmetic, no tolerance: this is a test at sampling resolution.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
        raise ValueError("expected an (N, 2) array with N >= 2")
    n = pts.shape[0]
    segs = [(i, i + 1) for i in range(n - 1)]
    if closed:
        segs.append((n - 1, 0))
    m = len(segs)

    def adjacent(i, j):
        a, b = segs[i]
        c, d = segs[j]
        return len({a, b} & {c, d}) > 0

    minx = np.minimum(pts[[s[0] for s in segs], 0], pts[[s[1] for s in segs], 0])
    maxx = np.maximum(pts[[s[0] for s in segs], 0], pts[[s[1] for s in segs], 0])
    order = sorted(range(m), key=lambda i: (minx[i], i))
    active: list[int] = []
    for i in order:
        active = [j for j in active if maxx[j] >= minx[i]]
        for j in active:
            if adjacent(i, j):
                continue
            a, b = segs[i]
            c, d = segs[j]
            if _segments_cross(pts[a], pts[b], pts[c], pts[d]):
                return False
        active.append(i)
    return True
