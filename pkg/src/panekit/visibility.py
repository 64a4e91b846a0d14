"""Per-window visibility policies: normal, timed, locked, timed icon.

Timed windows hide themselves after a fixed exposure period, timed-icon
windows collapse into the icon tray instead, and locked windows are
raised and shielded from every automatic hide. All time flows through
:func:`tick` with explicit logical clocks; nothing here ever consults a
wall clock.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Desktop,
    ModeKind,
    VisibilityMode,
    WindowState,
    raise_window,
    release_input_if,
    repack_icons,
)
from .errors import AlreadyExposed, ClockRegression


@dataclass(frozen=True)
class Transition:
    """A window automatically leaving the exposed state at a tick."""

    window: int
    to_state: WindowState
    at: int


def set_mode(desktop: Desktop, wid: int, mode: VisibilityMode) -> None:
    """Replace a window's visibility mode.

    Setting a timed mode on an exposed window starts its exposure period
    at the current clock. Locking a window raises it; locked windows are
    also refused as unobscure targets.
    """
    window = desktop.window(wid)
    window.mode = mode
    if mode.is_timed and window.state == WindowState.EXPOSED:
        window.exposure_started = desktop.clock
    else:
        window.exposure_started = None
    if mode.kind == ModeKind.LOCKED:
        raise_window(desktop, wid)


def expose(desktop: Desktop, wid: int) -> None:
    """Bring an invisible or iconified window back to its prior rect."""
    window = desktop.window(wid)
    if window.state not in (WindowState.INVISIBLE, WindowState.ICON):
        raise AlreadyExposed(f"window {wid} is {window.state.value}, not exposable")
    was_icon = window.state == WindowState.ICON
    if was_icon:
        assert window.saved_rect is not None
        window.rect = window.saved_rect
        window.saved_rect = None
    window.state = WindowState.EXPOSED
    if window.mode.is_timed:
        window.exposure_started = desktop.clock
    if was_icon:
        repack_icons(desktop)


def tick(desktop: Desktop, t: int) -> list[Transition]:
    """Advance the logical clock, hiding every timed window past its deadline.

    A deadline is inclusive: the transition fires at the first tick with
    ``t >= exposure_started + t_show``, exactly once per exposure.
    Transitions are reported in window-id order.
    """
    if t < desktop.clock:
        raise ClockRegression(f"tick {t} before clock {desktop.clock}")
    desktop.clock = t
    transitions: list[Transition] = []
    iconified = False
    for window in desktop.windows_by_id():
        if window.state != WindowState.EXPOSED or not window.mode.is_timed:
            continue
        if window.exposure_started is None:
            continue
        assert window.mode.t_show is not None
        if window.exposure_started + window.mode.t_show > t:
            continue
        window.exposure_started = None
        if window.mode.kind == ModeKind.TIMED:
            window.state = WindowState.INVISIBLE
        else:
            window.saved_rect = window.rect
            window.state = WindowState.ICON
            iconified = True
        release_input_if(desktop, window.id)
        transitions.append(Transition(window.id, window.state, t))
    if iconified:
        repack_icons(desktop)
    return transitions
