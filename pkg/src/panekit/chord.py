"""Modal window move/resize driven by a mouse chord or key combos.

Pressing both mouse buttons over a window (or issuing the move combo)
starts moving it; the resize combo grabs the corner nearest the pointer.
Once a mode is entered, pointer deltas drive the window directly, so the
pointer never has to sit on a border or corner. Releasing the chord or
hitting the cancel combo returns to idle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ChordPhase, ChordPhaseKind, Desktop, Edge, hit_test, raise_window
from .geom import Point, Rect
from .resize import LimitFeedback, resize_drag


@dataclass(frozen=True)
class BothButtonsDown:
    p: Point


@dataclass(frozen=True)
class BothButtonsUp:
    pass


@dataclass(frozen=True)
class KeyCombo:
    combo: str
    p: Point


@dataclass(frozen=True)
class PointerMove:
    dx: int
    dy: int


InputEvent = BothButtonsDown | BothButtonsUp | KeyCombo | PointerMove


@dataclass(frozen=True)
class MoveStarted:
    window: int


@dataclass(frozen=True)
class ResizeStarted:
    window: int
    part: Edge


@dataclass(frozen=True)
class Moved:
    window: int
    rect: Rect


@dataclass(frozen=True)
class Resized:
    window: int
    rect: Rect
    feedback: LimitFeedback | None


@dataclass(frozen=True)
class ModeEnded:
    pass


StateChange = MoveStarted | ResizeStarted | Moved | Resized | ModeEnded

# Tie order for equidistant corners.
_CORNERS = (Edge.TOP_LEFT, Edge.TOP_RIGHT, Edge.BOTTOM_LEFT, Edge.BOTTOM_RIGHT)


def nearest_corner(rect: Rect, p: Point) -> Edge:
    points = {
        Edge.TOP_LEFT: (rect.x, rect.y),
        Edge.TOP_RIGHT: (rect.x2, rect.y),
        Edge.BOTTOM_LEFT: (rect.x, rect.y2),
        Edge.BOTTOM_RIGHT: (rect.x2, rect.y2),
    }

    def dist2(corner: Edge) -> int:
        cx, cy = points[corner]
        return (cx - p.x) ** 2 + (cy - p.y) ** 2

    return min(_CORNERS, key=lambda c: (dist2(c), _CORNERS.index(c)))


def arm_resize(desktop: Desktop, wid: int, part: Edge) -> None:
    """Enter resize mode directly, e.g. when a lasso gesture selects a border."""
    desktop.input.phase = ChordPhase.resizing(wid, part)


def handle_chord_input(desktop: Desktop, event: InputEvent) -> list[StateChange]:
    """Feed one input event through the modal state machine.

    Unbound events, and events that make no sense in the current phase,
    are no-ops yielding an empty change list. Where the entry point was
    inside the window is irrelevant once a mode is entered: only deltas
    drive the window afterwards.
    """
    state = desktop.input
    phase = state.phase

    if isinstance(event, BothButtonsDown):
        if phase.kind != ChordPhaseKind.IDLE:
            return []
        wid = hit_test(desktop, event.p)
        if wid is None:
            return []
        raise_window(desktop, wid)
        state.phase = ChordPhase.moving(wid)
        return [MoveStarted(wid)]

    if isinstance(event, BothButtonsUp):
        if phase.kind == ChordPhaseKind.IDLE:
            return []
        state.phase = ChordPhase.idle()
        return [ModeEnded()]

    if isinstance(event, KeyCombo):
        if event.combo == state.bindings.cancel_combo:
            if phase.kind == ChordPhaseKind.IDLE:
                return []
            state.phase = ChordPhase.idle()
            return [ModeEnded()]
        if phase.kind != ChordPhaseKind.IDLE:
            return []
        wid = hit_test(desktop, event.p)
        if wid is None:
            return []
        if event.combo == state.bindings.move_combo:
            raise_window(desktop, wid)
            state.phase = ChordPhase.moving(wid)
            return [MoveStarted(wid)]
        if event.combo == state.bindings.resize_combo:
            part = nearest_corner(desktop.windows[wid].rect, event.p)
            state.phase = ChordPhase.resizing(wid, part)
            return [ResizeStarted(wid, part)]
        return []

    if isinstance(event, PointerMove):
        if phase.kind == ChordPhaseKind.MOVING:
            assert phase.window is not None
            window = desktop.window(phase.window)
            # Deliberately unclamped: a move may push the window off-screen;
            # reflow and the occlusion policies deal with strays.
            window.rect = window.rect.moved_to(
                window.rect.x + event.dx, window.rect.y + event.dy
            )
            return [Moved(window.id, window.rect)]
        if phase.kind == ChordPhaseKind.RESIZING:
            assert phase.window is not None and phase.part is not None
            applied, feedback = resize_drag(
                desktop, phase.window, phase.part, event.dx, event.dy
            )
            return [Resized(phase.window, applied, feedback)]
        return []

    return []
