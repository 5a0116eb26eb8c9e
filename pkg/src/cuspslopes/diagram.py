"""Deterministic SVG diagrams of a cusp lattice with short slopes highlighted.

Visual encoding is fixed so golden-file diffs stay legible: lattice dots
gray, short-slope points filled black (both sign representatives), slopes at
the threshold length ringed, and the threshold circle dashed.  Output is a
pure function of the DiagramSpec: identical inputs give byte-identical
documents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cusp_geometry import slope_vector
from .slope_search import ShortSlopeReport

# Adjacent lattice markers closer than this (in pixels) are unreadable.
MIN_MARKER_SEPARATION_PX = 6.0

CANVAS_PAD_PX = 20.0
LATTICE_DOT_RADIUS = 2.0
SLOPE_DOT_RADIUS = 4.0
RING_RADIUS = 7.0


class CanvasTooSmallError(ValueError):
    """Canvas cannot separate lattice points; carries a workable size."""

    def __init__(self, message: str, suggested_size: int):
        super().__init__(message)
        self.suggested_size = suggested_size


@dataclass(frozen=True)
class DiagramSpec:
    report: ShortSlopeReport
    radius_circle: bool = True
    lattice_extent: int = 4
    label_slopes: bool = False
    width: int = 600
    height: int = 600

    def __post_init__(self) -> None:
        if self.lattice_extent < 1:
            raise ValueError(f"lattice extent must be >= 1, got {self.lattice_extent}")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas dimensions must be positive")


@dataclass(frozen=True)
class CanvasTransform:
    """Uniform world-to-canvas map: origin at canvas center, y up in world."""

    scale: float
    cx: float
    cy: float

    def to_canvas(self, wx: float, wy: float) -> tuple[float, float]:
        return self.cx + self.scale * wx, self.cy - self.scale * wy

    def to_world(self, px: float, py: float) -> tuple[float, float]:
        return (px - self.cx) / self.scale, (self.cy - py) / self.scale


def _lattice_points(spec: DiagramSpec) -> list[tuple[int, int, float, float]]:
    shape = spec.report.shape
    mx, my = shape.meridian
    lx, ly = shape.longitude
    ext = spec.lattice_extent
    pts = []
    for a in range(-ext, ext + 1):
        for b in range(-ext, ext + 1):
            pts.append((a, b, a * mx + b * lx, a * my + b * ly))
    return pts


def _min_lattice_spacing(spec: DiagramSpec) -> float:
    # Differences of drawn translates are lattice vectors with coefficients
    # up to twice the extent.
    shape = spec.report.shape
    mx, my = shape.meridian
    lx, ly = shape.longitude
    ext2 = 2 * spec.lattice_extent
    best = math.inf
    for a in range(-ext2, ext2 + 1):
        for b in range(0, ext2 + 1):
            if (a, b) == (0, 0) or (b == 0 and a < 0):
                continue
            d = math.hypot(a * mx + b * lx, a * my + b * ly)
            if d < best:
                best = d
    return best


def canvas_transform(spec: DiagramSpec) -> CanvasTransform:
    """Transform used by the emitter; raises if markers would overlap."""
    report = spec.report
    radius = max(
        (math.hypot(x, y) for *_ab, x, y in _lattice_points(spec)),
        default=0.0,
    )
    for entry in report.entries:
        vx, vy = slope_vector(report.shape, entry.slope)
        radius = max(radius, math.hypot(vx, vy))
    if spec.radius_circle:
        radius = max(radius, report.threshold)
    radius *= 1.05

    min_spacing = _min_lattice_spacing(spec)
    needed_scale = MIN_MARKER_SEPARATION_PX / min_spacing
    suggested = math.ceil(2.0 * (needed_scale * radius + CANVAS_PAD_PX))

    half = min(spec.width, spec.height) / 2.0 - CANVAS_PAD_PX
    if half <= 0.0:
        raise CanvasTooSmallError(
            f"canvas {spec.width}x{spec.height} leaves no drawing area; "
            f"use at least {suggested}x{suggested}",
            suggested,
        )
    scale = half / radius
    spacing = min_spacing * scale
    if spacing < MIN_MARKER_SEPARATION_PX:
        raise CanvasTooSmallError(
            f"lattice points would be {spacing:.2f} px apart on a "
            f"{spec.width}x{spec.height} canvas; use at least "
            f"{suggested}x{suggested}",
            suggested,
        )
    return CanvasTransform(scale, spec.width / 2.0, spec.height / 2.0)


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def emit_lattice_svg(spec: DiagramSpec) -> str:
    """Render the lattice diagram; byte-identical for identical specs."""
    report = spec.report
    tf = canvas_transform(spec)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect width="{spec.width}" height="{spec.height}" fill="#ffffff"/>',
    ]
    if spec.radius_circle:
        out.append(
            f'<circle class="threshold" cx="{_fmt(tf.cx)}" cy="{_fmt(tf.cy)}" '
            f'r="{_fmt(report.threshold * tf.scale)}" fill="none" '
            f'stroke="#555555" stroke-width="1" stroke-dasharray="6,4"/>'
        )
    for a, b, wx, wy in _lattice_points(spec):
        px, py = tf.to_canvas(wx, wy)
        out.append(
            f'<circle class="lattice" cx="{_fmt(px)}" cy="{_fmt(py)}" '
            f'r="{_fmt(LATTICE_DOT_RADIUS)}" fill="#aaaaaa"/>'
        )
    labels = []
    for entry in report.entries:
        vx, vy = slope_vector(report.shape, entry.slope)
        for sign in (1, -1):
            px, py = tf.to_canvas(sign * vx, sign * vy)
            if entry.boundary:
                out.append(
                    f'<circle class="boundary-ring" cx="{_fmt(px)}" '
                    f'cy="{_fmt(py)}" r="{_fmt(RING_RADIUS)}" fill="none" '
                    f'stroke="#000000" stroke-width="1"/>'
                )
            out.append(
                f'<circle class="slope" cx="{_fmt(px)}" cy="{_fmt(py)}" '
                f'r="{_fmt(SLOPE_DOT_RADIUS)}" fill="#000000"/>'
            )
            if spec.label_slopes:
                a, b = sign * entry.slope.a, sign * entry.slope.b
                labels.append(
                    f'<text class="label" x="{_fmt(px + 6.0)}" '
                    f'y="{_fmt(py - 6.0)}" font-family="monospace" '
                    f'font-size="11" fill="#000000">({a},{b})</text>'
                )
    out.extend(labels)
    out.append("</svg>")
    return "\n".join(out) + "\n"
