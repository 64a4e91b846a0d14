"""Border selection by looping the pointer across a window edge.

The pointer's recent locations form a short timestamped polyline. When
that polyline crosses the same border edge twice in quick succession,
with the two crossings close together, the border is selected for
resizing; no precise pointing at the border is ever needed. Selection
combines where the pointer went with when it went there: samples older
than the time window never participate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Desktop, Edge, PointerSample, Window
from .errors import NonMonotonicTime
from .geom import Point, Rect
from .lasso_geom import segment_intersection

ExactPoint = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class BorderSelection:
    window: int
    part: Edge
    at_clock: int


# Edges are tested in this order; the first qualifying edge wins.
_EDGE_ORDER = (Edge.LEFT, Edge.RIGHT, Edge.TOP, Edge.BOTTOM)

_ADJACENT_CORNERS = {
    Edge.LEFT: (Edge.TOP_LEFT, Edge.BOTTOM_LEFT),
    Edge.RIGHT: (Edge.TOP_RIGHT, Edge.BOTTOM_RIGHT),
    Edge.TOP: (Edge.TOP_LEFT, Edge.TOP_RIGHT),
    Edge.BOTTOM: (Edge.BOTTOM_LEFT, Edge.BOTTOM_RIGHT),
}


def edge_segment(rect: Rect, edge: Edge) -> tuple[Point, Point]:
    if edge == Edge.LEFT:
        return Point(rect.x, rect.y), Point(rect.x, rect.y2)
    if edge == Edge.RIGHT:
        return Point(rect.x2, rect.y), Point(rect.x2, rect.y2)
    if edge == Edge.TOP:
        return Point(rect.x, rect.y), Point(rect.x2, rect.y)
    if edge == Edge.BOTTOM:
        return Point(rect.x, rect.y2), Point(rect.x2, rect.y2)
    raise ValueError(f"{edge} is not a border edge")


def corner_point(rect: Rect, corner: Edge) -> Point:
    return {
        Edge.TOP_LEFT: Point(rect.x, rect.y),
        Edge.TOP_RIGHT: Point(rect.x2, rect.y),
        Edge.BOTTOM_LEFT: Point(rect.x, rect.y2),
        Edge.BOTTOM_RIGHT: Point(rect.x2, rect.y2),
    }[corner]


def crossings(
    polyline: Sequence[Point], edge: tuple[Point, Point]
) -> list[ExactPoint]:
    """Ordered intersection points between a polyline and one edge segment.

    A polyline segment collinear with the edge contributes no crossings,
    and an intersection landing exactly on a shared sample point of two
    consecutive segments is counted once.
    """
    points: list[ExactPoint] = []
    for a, b in zip(polyline, polyline[1:]):
        hit = segment_intersection(a, b, edge[0], edge[1])
        if hit is None:
            continue
        if points and points[-1] == hit:
            continue
        points.append(hit)
    return points


def _within(a: ExactPoint, b: ExactPoint, d: int) -> bool:
    return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2 <= d * d


def _outline_meets_bbox(rect: Rect, lo: Point, hi: Point) -> bool:
    # The border outline misses the box when the box is fully outside the
    # closed rect, or buried strictly inside its interior.
    if hi.x < rect.x or lo.x > rect.x2 or hi.y < rect.y or lo.y > rect.y2:
        return False
    inside = lo.x > rect.x and hi.x < rect.x2 and lo.y > rect.y and hi.y < rect.y2
    return not inside


def _select_on_window(
    window: Window, polyline: Sequence[Point], proximity_d: int, at: int
) -> BorderSelection | None:
    for edge in _EDGE_ORDER:
        pts = crossings(polyline, edge_segment(window.rect, edge))
        if len(pts) < 2:
            continue
        last, prev = pts[-1], pts[-2]
        if not _within(last, prev, proximity_d):
            continue
        part = edge
        for corner in _ADJACENT_CORNERS[edge]:
            cp = corner_point(window.rect, corner)
            exact = (Fraction(cp.x), Fraction(cp.y))
            if _within(last, exact, proximity_d) and _within(prev, exact, proximity_d):
                part = corner
                break
        return BorderSelection(window.id, part, at)
    return None


def push_sample(desktop: Desktop, t: int, p: Point) -> BorderSelection | None:
    """Record a pointer sample and report a border selection if one fires.

    The queue keeps the newest ``n_max`` samples no older than ``t_lasso``
    before the new one. Only the topmost exposed window whose border
    outline meets the polyline's bounding box is tested, mirroring
    ordinary click routing. A selection clears the queue: one selection
    per gesture.
    """
    queue = desktop.lasso
    if queue.samples and t < queue.samples[-1].t:
        raise NonMonotonicTime(
            f"sample at {t} after sample at {queue.samples[-1].t}"
        )
    queue.samples.append(PointerSample(t, p))
    cfg = queue.config
    keep = [s for s in queue.samples if t - s.t <= cfg.t_lasso]
    queue.samples = keep[-cfg.n_max:]

    polyline = [s.p for s in queue.samples]
    if len(polyline) < 2:
        return None
    lo = Point(min(q.x for q in polyline), min(q.y for q in polyline))
    hi = Point(max(q.x for q in polyline), max(q.y for q in polyline))

    for wid in reversed(desktop.z_order):
        window = desktop.windows[wid]
        if not window.exposed or not _outline_meets_bbox(window.rect, lo, hi):
            continue
        selection = _select_on_window(window, polyline, cfg.proximity_d, t)
        if selection is not None:
            queue.clear()
        return selection
    return None
