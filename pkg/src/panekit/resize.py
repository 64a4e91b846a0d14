"""Border-drag resizing with min/max clamping and explicit limit feedback.

When a drag asks for more (or less) than the window's limits allow, the
resize stops at the limit and a :class:`LimitFeedback` event names every
violated limit, so the user is never left wondering why the border
stopped moving. Feedback is emitted exactly when the applied rect differs
from the requested one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Desktop, Edge
from .errors import NotExposed
from .geom import Rect


class Limit(Enum):
    MAX_WIDTH = "max_width"
    MAX_HEIGHT = "max_height"
    MIN_WIDTH = "min_width"
    MIN_HEIGHT = "min_height"


@dataclass(frozen=True)
class LimitFeedback:
    window: int
    limited: frozenset[Limit]
    at_clock: int

    def limited_names(self) -> list[str]:
        """Violated limits in canonical declaration order."""
        return [limit.value for limit in Limit if limit in self.limited]


def resize_drag(
    desktop: Desktop, wid: int, edge: Edge, dx: int, dy: int
) -> tuple[Rect, LimitFeedback | None]:
    """Drag a border or corner by a pointer delta, clamping to the limits.

    The edges opposite the dragged one never move: a drag on the left
    border adjusts the origin so the right border stays fixed, and so on.
    Returns the applied rect (also written to the window) plus feedback
    when the request had to be clamped.
    """
    window = desktop.window(wid)
    if not window.exposed:
        raise NotExposed(f"window {wid} is not exposed")

    r = window.rect
    req_w, req_h = r.w, r.h
    if edge.moves_right:
        req_w = r.w + dx
    elif edge.moves_left:
        req_w = r.w - dx
    if edge.moves_bottom:
        req_h = r.h + dy
    elif edge.moves_top:
        req_h = r.h - dy

    violated = set()
    app_w, app_h = req_w, req_h
    if app_w > window.max_size.w:
        app_w = window.max_size.w
        violated.add(Limit.MAX_WIDTH)
    elif app_w < window.min_size.w:
        app_w = window.min_size.w
        violated.add(Limit.MIN_WIDTH)
    if app_h > window.max_size.h:
        app_h = window.max_size.h
        violated.add(Limit.MAX_HEIGHT)
    elif app_h < window.min_size.h:
        app_h = window.min_size.h
        violated.add(Limit.MIN_HEIGHT)

    # Anchor the non-dragged edge: left/top drags move the origin.
    app_x = r.x2 - app_w if edge.moves_left else r.x
    app_y = r.y2 - app_h if edge.moves_top else r.y

    applied = Rect(app_x, app_y, app_w, app_h)
    window.rect = applied
    feedback = None
    if violated:
        feedback = LimitFeedback(wid, frozenset(violated), desktop.clock)
    return applied, feedback
