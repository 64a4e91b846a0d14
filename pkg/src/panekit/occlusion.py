"""Keep a target window from obscuring a protected window.

Three mechanisms are available: move the target somewhere with more free
screen, hide it until the current action ends, or shrink it until the
protected window is clear. Planning is a pure read of the desktop;
:func:`apply_plan` performs the mutation and rejects stale plans.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Desktop, ModeKind, Window, WindowState, release_input_if
from .errors import LockedTarget, NotExposed, SameWindow, StalePlan, NothingToRestore
from .geom import Rect, overlap_area

MOVE_GRID = 8  # candidate spacing for move-away placement search, px


class UnobscureStrategy(Enum):
    MOVE_AWAY = "move_away"
    DISAPPEAR = "disappear"
    REDUCE = "reduce"
    AUTO = "auto"


class ActionKind(Enum):
    MOVE_TO = "move_to"
    HIDE_UNTIL_ACTION_END = "hide_until_action_end"
    REDUCE_TO = "reduce_to"


@dataclass(frozen=True)
class PlanAction:
    kind: ActionKind
    rect: Rect | None = None


@dataclass(frozen=True)
class UnobscurePlan:
    target: int
    action: PlanAction
    residual_overlap: int
    # Staleness guard: the target's geometry and stacking rank at planning time.
    planned_rect: Rect
    planned_z: int


def _checked_pair(desktop: Desktop, target: int, protected: int) -> tuple[Window, Window]:
    if target == protected:
        raise SameWindow(f"window {target} cannot be unobscured from itself")
    tw = desktop.window(target)
    pw = desktop.window(protected)
    if not tw.exposed:
        raise NotExposed(f"target window {target} is not exposed")
    if not pw.exposed:
        raise NotExposed(f"protected window {protected} is not exposed")
    if tw.mode.kind == ModeKind.LOCKED:
        raise LockedTarget(f"window {target} is locked")
    return tw, pw


def _other_overlap(desktop: Desktop, candidate: Rect, target: int, protected: int) -> int:
    total = 0
    for window in desktop.windows.values():
        if window.id in (target, protected) or not window.exposed:
            continue
        total += overlap_area(candidate, window.rect)
    return total


def _plan_move_away(desktop: Desktop, tw: Window, pw: Window) -> UnobscurePlan:
    """Best on-screen placement by (protected overlap, other overlap, distance).

    Candidates are every position on an 8-px grid where the target fits on
    screen, plus the current position, so the plan can never be worse than
    doing nothing. Ties break row-major: smaller y, then smaller x.
    """
    r = tw.rect
    display = desktop.display
    candidates = [(r.x, r.y)]
    if r.w <= display.w and r.h <= display.h:
        for y in range(0, display.h - r.h + 1, MOVE_GRID):
            for x in range(0, display.w - r.w + 1, MOVE_GRID):
                candidates.append((x, y))

    def score(pos: tuple[int, int]) -> tuple[int, int, int, int, int]:
        x, y = pos
        rect = Rect(x, y, r.w, r.h)
        prot = overlap_area(rect, pw.rect)
        other = _other_overlap(desktop, rect, tw.id, pw.id)
        dist = max(abs(x - r.x), abs(y - r.y))
        return (prot, other, dist, y, x)

    best = min(candidates, key=score)
    best_rect = Rect(best[0], best[1], r.w, r.h)
    return UnobscurePlan(
        target=tw.id,
        action=PlanAction(ActionKind.MOVE_TO, best_rect),
        residual_overlap=overlap_area(best_rect, pw.rect),
        planned_rect=r,
        planned_z=tw.z,
    )


def _plan_reduce(tw: Window, pw: Window) -> UnobscurePlan:
    """Largest top-left-anchored shrink that clears the protected window.

    Shrinking can only pull the right or bottom border clear of the
    protected window's left or top border. If neither axis can reach
    zero overlap above the minimum size, the plan shrinks all the way to
    the minimum and reports the residual.
    """
    r = tw.rect
    candidates: list[Rect] = []
    w_clear = pw.rect.x - r.x
    if w_clear >= tw.min_size.w:
        candidates.append(Rect(r.x, r.y, min(w_clear, r.w), r.h))
    h_clear = pw.rect.y - r.y
    if h_clear >= tw.min_size.h:
        candidates.append(Rect(r.x, r.y, r.w, min(h_clear, r.h)))
    if candidates:
        # Prefer the larger surviving area; on a tie keep the full height.
        best = max(candidates, key=lambda c: (c.area, c.h))
    else:
        best = Rect(r.x, r.y, tw.min_size.w, tw.min_size.h)
    return UnobscurePlan(
        target=tw.id,
        action=PlanAction(ActionKind.REDUCE_TO, best),
        residual_overlap=overlap_area(best, pw.rect),
        planned_rect=r,
        planned_z=tw.z,
    )


def plan_unobscure(
    desktop: Desktop, target: int, protected: int, strategy: UnobscureStrategy
) -> UnobscurePlan:
    """Plan how to keep ``target`` from covering ``protected``.

    When the two windows are already disjoint every strategy returns the
    identity plan. The automatic strategy prefers moving, then reducing,
    and hides the target only when neither can fully clear the protected
    window.
    """
    tw, pw = _checked_pair(desktop, target, protected)
    if overlap_area(tw.rect, pw.rect) == 0:
        return UnobscurePlan(
            target=target,
            action=PlanAction(ActionKind.MOVE_TO, tw.rect),
            residual_overlap=0,
            planned_rect=tw.rect,
            planned_z=tw.z,
        )
    if strategy == UnobscureStrategy.MOVE_AWAY:
        return _plan_move_away(desktop, tw, pw)
    if strategy == UnobscureStrategy.REDUCE:
        return _plan_reduce(tw, pw)
    if strategy == UnobscureStrategy.AUTO:
        move = _plan_move_away(desktop, tw, pw)
        if move.residual_overlap == 0:
            return move
        reduce = _plan_reduce(tw, pw)
        if reduce.residual_overlap == 0:
            return reduce
    return UnobscurePlan(
        target=target,
        action=PlanAction(ActionKind.HIDE_UNTIL_ACTION_END),
        residual_overlap=0,
        planned_rect=tw.rect,
        planned_z=tw.z,
    )


def apply_plan(desktop: Desktop, plan: UnobscurePlan) -> None:
    """Execute a plan produced against the current desktop state."""
    window = desktop.window(plan.target)
    if window.rect != plan.planned_rect or window.z != plan.planned_z:
        raise StalePlan(f"window {plan.target} changed since planning")
    if plan.action.kind == ActionKind.MOVE_TO:
        assert plan.action.rect is not None
        window.rect = plan.action.rect
    elif plan.action.kind == ActionKind.REDUCE_TO:
        assert plan.action.rect is not None
        window.saved_rect = window.rect
        window.rect = plan.action.rect
    else:
        window.saved_rect = window.rect
        window.state = WindowState.HIDDEN_FOR_ACTION
        window.exposure_started = None
        release_input_if(desktop, window.id)


def end_action(desktop: Desktop, target: int) -> None:
    """Restore a window hidden or reduced for the duration of an action."""
    window = desktop.window(target)
    if window.saved_rect is None and window.state != WindowState.HIDDEN_FOR_ACTION:
        raise NothingToRestore(f"window {target} has nothing to restore")
    was_hidden = window.state == WindowState.HIDDEN_FOR_ACTION
    if window.saved_rect is not None:
        window.rect = window.saved_rect
        window.saved_rect = None
    window.state = WindowState.EXPOSED
    if was_hidden and window.mode.is_timed:
        window.exposure_started = desktop.clock
