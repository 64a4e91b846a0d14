"""Desktop state model: windows, z-order, logical clock, hit testing, occlusion.

The :class:`Desktop` is a single mutable state machine. It has no wall-clock
dependence and no internal threads; time only advances through explicit
logical ticks, which is what makes event replay deterministic. Callers must
serialize access.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import (
    BadLimits,
    BadRect,
    NoRequiredComponent,
    NoSuchWindow,
    ZeroArea,
)
from .geom import DisplayBounds, Point, Rect, Size, clip

# Window chrome. The title bar and borders frame the content region, so a
# window must be this much larger than the content it shows.
TITLE_BAR_H = 20
BORDER_W = 2
CHROME_W = 2 * BORDER_W
CHROME_H = TITLE_BAR_H + 2 * BORDER_W

# Iconified windows sit in a tray row along the bottom display edge,
# packed left-to-right in id order.
ICON_SIZE = 64


class WindowState(Enum):
    EXPOSED = "exposed"
    INVISIBLE = "invisible"
    ICON = "icon"
    HIDDEN_FOR_ACTION = "hidden_for_action"


class Anchor(Enum):
    """How a window reacts to display-bounds changes."""

    PROPORTIONAL = "proportional"
    FIXED = "fixed"


class Edge(Enum):
    """A window border part; corner values act on both axes."""

    LEFT = "left"
    RIGHT = "right"
    TOP = "top"
    BOTTOM = "bottom"
    TOP_LEFT = "top_left"
    TOP_RIGHT = "top_right"
    BOTTOM_LEFT = "bottom_left"
    BOTTOM_RIGHT = "bottom_right"

    @property
    def moves_left(self) -> bool:
        return self in (Edge.LEFT, Edge.TOP_LEFT, Edge.BOTTOM_LEFT)

    @property
    def moves_right(self) -> bool:
        return self in (Edge.RIGHT, Edge.TOP_RIGHT, Edge.BOTTOM_RIGHT)

    @property
    def moves_top(self) -> bool:
        return self in (Edge.TOP, Edge.TOP_LEFT, Edge.TOP_RIGHT)

    @property
    def moves_bottom(self) -> bool:
        return self in (Edge.BOTTOM, Edge.BOTTOM_LEFT, Edge.BOTTOM_RIGHT)


class ModeKind(Enum):
    NORMAL = "normal"
    TIMED = "timed"
    LOCKED = "locked"
    TIMED_ICON = "timed_icon"


@dataclass(frozen=True)
class VisibilityMode:
    """Per-window display policy: normal, timed, locked, or timed icon."""

    kind: ModeKind
    t_show: int | None = None

    def __post_init__(self) -> None:
        if self.kind in (ModeKind.TIMED, ModeKind.TIMED_ICON):
            if self.t_show is None or self.t_show <= 0:
                raise ValueError("timed modes need a positive display period")
        elif self.t_show is not None:
            raise ValueError(f"{self.kind.value} mode takes no display period")

    @property
    def is_timed(self) -> bool:
        return self.kind in (ModeKind.TIMED, ModeKind.TIMED_ICON)

    @classmethod
    def normal(cls) -> "VisibilityMode":
        return cls(ModeKind.NORMAL)

    @classmethod
    def timed(cls, t_show: int) -> "VisibilityMode":
        return cls(ModeKind.TIMED, t_show)

    @classmethod
    def locked(cls) -> "VisibilityMode":
        return cls(ModeKind.LOCKED)

    @classmethod
    def timed_icon(cls, t_show: int) -> "VisibilityMode":
        return cls(ModeKind.TIMED_ICON, t_show)


@dataclass(frozen=True)
class WindowComponent:
    """A content element; lower priority numbers are more integral."""

    name: str
    w: int
    h: int
    required: bool
    priority: int

    def __post_init__(self) -> None:
        if self.w <= 0 or self.h <= 0:
            raise BadLimits(f"component {self.name!r} dimensions must be positive")


@dataclass
class Window:
    id: int
    rect: Rect
    z: int
    min_size: Size
    max_size: Size
    components: tuple[WindowComponent, ...]
    anchor: Anchor
    mode: VisibilityMode = field(default_factory=VisibilityMode.normal)
    state: WindowState = WindowState.EXPOSED
    saved_rect: Rect | None = None
    exposure_started: int | None = None

    @property
    def exposed(self) -> bool:
        return self.state == WindowState.EXPOSED

    def content_rect(self) -> Rect:
        """The geometry the window occupies when shown.

        For icons and action-hidden windows this is the saved rect the
        window will restore to.
        """
        if self.saved_rect is not None and self.state in (
            WindowState.ICON,
            WindowState.HIDDEN_FOR_ACTION,
        ):
            return self.saved_rect
        return self.rect


class ChordPhaseKind(Enum):
    IDLE = "idle"
    MOVING = "moving"
    RESIZING = "resizing"


@dataclass(frozen=True)
class ChordPhase:
    kind: ChordPhaseKind
    window: int | None = None
    part: Edge | None = None

    @classmethod
    def idle(cls) -> "ChordPhase":
        return cls(ChordPhaseKind.IDLE)

    @classmethod
    def moving(cls, window: int) -> "ChordPhase":
        return cls(ChordPhaseKind.MOVING, window)

    @classmethod
    def resizing(cls, window: int, part: Edge) -> "ChordPhase":
        return cls(ChordPhaseKind.RESIZING, window, part)


@dataclass(frozen=True)
class ChordBindings:
    """Names of the key combos recognized by the chord controller."""

    move_combo: str = "move"
    resize_combo: str = "resize"
    cancel_combo: str = "escape"


@dataclass
class ChordState:
    phase: ChordPhase = field(default_factory=ChordPhase.idle)
    bindings: ChordBindings = field(default_factory=ChordBindings)


@dataclass(frozen=True)
class PointerSample:
    t: int
    p: Point


@dataclass(frozen=True)
class LassoConfig:
    """Tuning for temporal border selection.

    ``n_max`` bounds queue memory, ``t_lasso`` is the maximum age of a
    sample that may participate in a gesture, and ``proximity_d`` is how
    close two border crossings must be to count as a loop.
    """

    n_max: int = 32
    t_lasso: int = 500
    proximity_d: int = 24

    def __post_init__(self) -> None:
        if self.n_max < 4:
            raise ValueError("queue capacity must be at least 4")
        if self.t_lasso <= 0 or self.proximity_d <= 0:
            raise ValueError("time window and proximity must be positive")


@dataclass
class PointerSampleQueue:
    """Timestamped last-N pointer locations used for lasso detection."""

    config: LassoConfig = field(default_factory=LassoConfig)
    samples: list[PointerSample] = field(default_factory=list)

    def clear(self) -> None:
        self.samples.clear()


@dataclass
class Desktop:
    """The full engine state. Mutated in place by the policy modules."""

    display: DisplayBounds
    windows: dict[int, Window] = field(default_factory=dict)
    z_order: list[int] = field(default_factory=list)  # bottom to top
    clock: int = 0
    input: ChordState = field(default_factory=ChordState)
    lasso: PointerSampleQueue = field(default_factory=PointerSampleQueue)
    next_id: int = 1

    def window(self, wid: int) -> Window:
        try:
            return self.windows[wid]
        except KeyError:
            raise NoSuchWindow(f"no window {wid}") from None

    def windows_by_id(self) -> list[Window]:
        return [self.windows[wid] for wid in sorted(self.windows)]


def sorted_components(window: Window) -> list[WindowComponent]:
    """Components in display order: ascending priority, ties by list order."""
    return sorted(window.components, key=lambda c: c.priority)


def min_rect(window: Window) -> Size:
    """Smallest window size whose content region fits the most integral
    required component plus chrome."""
    required = [c for c in sorted_components(window) if c.required]
    if not required:
        raise NoRequiredComponent(f"window {window.id} has no required component")
    first = required[0]
    return Size(first.w + CHROME_W, first.h + CHROME_H)


def visible_component_count(window: Window) -> int:
    """How many components the window's geometry can show.

    Components stack vertically in priority order inside the content
    region, so the count is the longest prefix whose max width and summed
    height fit. Hidden windows are measured at the rect they restore to.
    """
    rect = window.content_rect()
    content_w = rect.w - CHROME_W
    content_h = rect.h - CHROME_H
    count = 0
    need_w = 0
    need_h = 0
    for comp in sorted_components(window):
        need_w = max(need_w, comp.w)
        need_h += comp.h
        if need_w > content_w or need_h > content_h:
            break
        count += 1
    return count


def _redensify(desktop: Desktop) -> None:
    for rank, wid in enumerate(desktop.z_order):
        desktop.windows[wid].z = rank


def create_window(
    desktop: Desktop,
    rect: Rect,
    min_size: Size,
    max_size: Size,
    components: list[WindowComponent] | tuple[WindowComponent, ...],
    anchor: Anchor = Anchor.FIXED,
) -> int:
    """Create a window at the top of the z-order.

    The given minimum size is raised to the window's minimum content size,
    so a window can never be resized below the point where its most
    integral required component disappears.
    """
    comps = tuple(components)
    probe = Window(
        id=0, rect=rect, z=0, min_size=min_size, max_size=max_size,
        components=comps, anchor=anchor,
    )
    floor = min_rect(probe)
    min_size = Size(max(min_size.w, floor.w), max(min_size.h, floor.h))
    if min_size.w > max_size.w or min_size.h > max_size.h:
        raise BadLimits(
            f"min {min_size.w}x{min_size.h} exceeds max {max_size.w}x{max_size.h}"
        )
    if not (min_size.w <= rect.w <= max_size.w and min_size.h <= rect.h <= max_size.h):
        raise BadRect(
            f"rect {rect.w}x{rect.h} outside limits "
            f"[{min_size.w}x{min_size.h}, {max_size.w}x{max_size.h}]"
        )
    wid = desktop.next_id
    desktop.next_id += 1
    window = Window(
        id=wid, rect=rect, z=len(desktop.z_order), min_size=min_size,
        max_size=max_size, components=comps, anchor=anchor,
    )
    desktop.windows[wid] = window
    desktop.z_order.append(wid)
    return wid


def destroy_window(desktop: Desktop, wid: int) -> None:
    window = desktop.window(wid)
    del desktop.windows[wid]
    desktop.z_order.remove(wid)
    _redensify(desktop)
    release_input_if(desktop, wid)
    if window.state == WindowState.ICON:
        repack_icons(desktop)


def raise_window(desktop: Desktop, wid: int) -> None:
    """Move a window to the top of the z-order, preserving the order of the rest."""
    desktop.window(wid)
    desktop.z_order.remove(wid)
    desktop.z_order.append(wid)
    _redensify(desktop)


def hit_test(desktop: Desktop, p: Point) -> int | None:
    """Topmost exposed window containing the point, if any.

    Invisible, iconified and action-hidden windows are never hit.
    """
    for wid in reversed(desktop.z_order):
        window = desktop.windows[wid]
        if window.exposed and window.rect.contains_point(p):
            return wid
    return None


def occluded_fraction(desktop: Desktop, wid: int) -> Fraction:
    """Fraction of a window's area covered by exposed higher-z windows.

    Computed exactly by coordinate-compression rectangle decomposition.
    """
    window = desktop.window(wid)
    target = window.rect
    if target.area == 0:
        raise ZeroArea(f"window {wid} has a zero-area rect")
    covers = []
    for other_id in desktop.z_order:
        other = desktop.windows[other_id]
        if other.id == wid or not other.exposed or other.z <= window.z:
            continue
        c = clip(other.rect, target)
        if c.area > 0:
            covers.append(c)
    if not covers:
        return Fraction(0)
    xs = sorted({target.x, target.x2, *(c.x for c in covers), *(c.x2 for c in covers)})
    ys = sorted({target.y, target.y2, *(c.y for c in covers), *(c.y2 for c in covers)})
    covered = 0
    for x1, x2 in zip(xs, xs[1:]):
        for y1, y2 in zip(ys, ys[1:]):
            for c in covers:
                if c.x <= x1 and x2 <= c.x2 and c.y <= y1 and y2 <= c.y2:
                    covered += (x2 - x1) * (y2 - y1)
                    break
    return Fraction(covered, target.area)


def repack_icons(desktop: Desktop) -> None:
    """Re-lay the icon tray along the bottom display edge, in id order."""
    tray_y = max(0, desktop.display.h - ICON_SIZE)
    slot = 0
    for wid in sorted(desktop.windows):
        window = desktop.windows[wid]
        if window.state == WindowState.ICON:
            window.rect = Rect(slot * ICON_SIZE, tray_y, ICON_SIZE, ICON_SIZE)
            slot += 1


def release_input_if(desktop: Desktop, wid: int) -> None:
    """Drop the modal input phase if it references the given window.

    Called whenever a window stops being exposed, so the chord state
    machine can never keep driving a hidden or destroyed window.
    """
    phase = desktop.input.phase
    if phase.kind != ChordPhaseKind.IDLE and phase.window == wid:
        desktop.input.phase = ChordPhase.idle()
