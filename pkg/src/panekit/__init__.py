"""panekit: a deterministic window-management policy engine.

The engine is a headless desktop model driven entirely by explicit
events with logical timestamps. Six policies operate on it: limit-clamped
resizing with feedback, occlusion avoidance (move away / disappear /
reduce), chord-invoked move and resize, display reflow with minimum
viewable content, lasso border selection, and timed visibility modes.
A replay harness turns line-delimited traces into canonical snapshots.
"""

from .core import (
    Anchor,
    ChordBindings,
    ChordPhase,
    ChordState,
    Desktop,
    Edge,
    LassoConfig,
    ModeKind,
    PointerSample,
    PointerSampleQueue,
    VisibilityMode,
    Window,
    WindowComponent,
    WindowState,
    create_window,
    destroy_window,
    hit_test,
    min_rect,
    occluded_fraction,
    raise_window,
    visible_component_count,
)
from .chord import handle_chord_input
from .errors import EngineError
from .geom import DisplayBounds, Point, Rect, Size, overlap_area, translate_into
from .lasso import BorderSelection, crossings, push_sample
from .occlusion import (
    UnobscurePlan,
    UnobscureStrategy,
    apply_plan,
    end_action,
    plan_unobscure,
)
from .reflow import ReflowReport, reflow
from .resize import Limit, LimitFeedback, resize_drag
from .trace import ReplaySession, replay, verify
from .visibility import Transition, expose, set_mode, tick

__all__ = [
    "Anchor",
    "BorderSelection",
    "ChordBindings",
    "ChordPhase",
    "ChordState",
    "Desktop",
    "DisplayBounds",
    "Edge",
    "EngineError",
    "LassoConfig",
    "Limit",
    "LimitFeedback",
    "ModeKind",
    "Point",
    "PointerSample",
    "PointerSampleQueue",
    "Rect",
    "ReflowReport",
    "ReplaySession",
    "Size",
    "Transition",
    "UnobscurePlan",
    "UnobscureStrategy",
    "VisibilityMode",
    "Window",
    "WindowComponent",
    "WindowState",
    "apply_plan",
    "create_window",
    "crossings",
    "destroy_window",
    "end_action",
    "expose",
    "handle_chord_input",
    "hit_test",
    "min_rect",
    "occluded_fraction",
    "overlap_area",
    "plan_unobscure",
    "push_sample",
    "raise_window",
    "reflow",
    "replay",
    "resize_drag",
    "set_mode",
    "tick",
    "translate_into",
    "verify",
    "visible_component_count",
]
