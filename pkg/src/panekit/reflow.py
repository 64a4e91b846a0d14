"""Automatic window resize and reposition when the display bounds change.

Each window is re-fitted in four steps: re-anchor its position, shrink it
if it no longer fits (never below its minimum content size), translate it
back inside the display, and finally grow it to show further components
if the re-fit left slack. Windows that were not disturbed by the first
three steps are left byte-identical, so a reflow to the same bounds is
the identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    CHROME_H,
    CHROME_W,
    Desktop,
    Anchor,
    Window,
    WindowState,
    min_rect,
    repack_icons,
    sorted_components,
    visible_component_count,
)
from .errors import DisplayTooSmall
from .geom import DisplayBounds, Rect, Size, translate_into


@dataclass(frozen=True)
class ReflowEntry:
    window: int
    old_rect: Rect
    new_rect: Rect
    shrunk_to_min: bool
    moved_into_area: bool
    components_visible: int


@dataclass(frozen=True)
class ReflowReport:
    display: DisplayBounds
    entries: tuple[ReflowEntry, ...]


def _scaled_origin(rect: Rect, old: DisplayBounds, new: DisplayBounds) -> tuple[int, int]:
    # Floor keeps the result integral; size is untouched by anchoring.
    return (rect.x * new.w) // old.w, (rect.y * new.h) // old.h


def _grow_to_fit_components(window: Window, rect: Rect, display: DisplayBounds) -> Rect:
    """Grow rightward/downward just enough to show further components.

    The top-left corner stays fixed; growth stops at the display edges and
    the window's maximum size.
    """
    room_w = min(display.w - rect.x, window.max_size.w)
    room_h = min(display.h - rect.y, window.max_size.h)
    need_w = 0
    need_h = 0
    best_w, best_h = rect.w, rect.h
    for comp in sorted_components(window):
        need_w = max(need_w, comp.w)
        need_h += comp.h
        if need_w + CHROME_W > room_w or need_h + CHROME_H > room_h:
            break
        best_w = max(best_w, need_w + CHROME_W)
        best_h = max(best_h, need_h + CHROME_H)
    return Rect(rect.x, rect.y, best_w, best_h)


def _effective_floor(window: Window) -> Size:
    # min_size is raised to the minimum content size at creation, but an
    # externally built window may predate that; take the max defensively.
    floor = min_rect(window)
    return Size(max(floor.w, window.min_size.w), max(floor.h, window.min_size.h))


def reflow(desktop: Desktop, new_display: DisplayBounds) -> ReflowReport:
    """Re-fit every window into new display bounds.

    Raises :class:`DisplayTooSmall` (before touching anything) when some
    window's minimum size cannot fit; a partial reflow would leave the
    desktop violating its own invariants.
    """
    floors = {}
    for window in desktop.windows.values():
        floor = _effective_floor(window)
        floors[window.id] = floor
        if floor.w > new_display.w or floor.h > new_display.h:
            raise DisplayTooSmall(
                f"window {window.id} needs {floor.w}x{floor.h}, "
                f"display offers {new_display.w}x{new_display.h}"
            )

    old_display = desktop.display
    desktop.display = new_display
    old_rects = {wid: desktop.windows[wid].rect for wid in desktop.z_order}
    entries = []
    for wid in desktop.z_order:  # bottom first
        window = desktop.windows[wid]
        is_icon = window.state == WindowState.ICON
        hidden = window.state == WindowState.HIDDEN_FOR_ACTION
        # Icons re-fit the geometry they will restore to; their on-screen
        # slot is re-packed against the new bottom edge afterwards.
        rect = window.saved_rect if (is_icon and window.saved_rect) else window.rect
        floor = floors[wid]

        if window.anchor == Anchor.PROPORTIONAL:
            x, y = _scaled_origin(rect, old_display, new_display)
            rect = rect.moved_to(x, y)
        fitted_w = max(floor.w, min(rect.w, new_display.w))
        fitted_h = max(floor.h, min(rect.h, new_display.h))
        shrunk_to_min = (fitted_w == floor.w and fitted_w < rect.w) or (
            fitted_h == floor.h and fitted_h < rect.h
        )
        rect = rect.resized(fitted_w, fitted_h)
        contained = translate_into(rect, new_display)
        moved_into_area = contained != rect
        rect = contained

        start = window.saved_rect if (is_icon and window.saved_rect) else old_rects[wid]
        if rect != start:
            rect = _grow_to_fit_components(window, rect, new_display)

        if is_icon:
            window.saved_rect = rect
        else:
            window.rect = rect
            if hidden:
                window.saved_rect = rect

        entries.append(
            (wid, shrunk_to_min, moved_into_area)
        )

    repack_icons(desktop)
    report_entries = []
    for wid, shrunk_to_min, moved_into_area in sorted(entries):
        window = desktop.windows[wid]
        report_entries.append(
            ReflowEntry(
                window=wid,
                old_rect=old_rects[wid],
                new_rect=window.rect,
                shrunk_to_min=shrunk_to_min,
                moved_into_area=moved_into_area,
                components_visible=visible_component_count(window),
            )
        )
    return ReflowReport(display=new_display, entries=tuple(report_entries))
