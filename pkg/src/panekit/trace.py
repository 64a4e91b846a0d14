"""Deterministic event-trace replay, canonical snapshots, golden verification.

A trace is UTF-8 text, one JSON record per line, each carrying a logical
timestamp ``t`` and a ``kind``. Records are applied strictly in file
order (the documented tiebreaker for records sharing a timestamp): the
clock is advanced first, which may fire visibility transitions, then the
record is dispatched to its policy module. Snapshots and output events
serialize with a fixed key order and compact separators, so equal
desktops produce byte-identical lines and goldens diff cleanly.

Policy errors do not stop a replay; they become ``error`` output records
and the desktop carries on. Malformed lines and clock regressions are
hard failures, because the trace itself is broken.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import chord
from .core import (
    Anchor,
    ChordPhaseKind,
    Desktop,
    Edge,
    LassoConfig,
    ModeKind,
    VisibilityMode,
    WindowComponent,
    create_window,
    destroy_window,
    visible_component_count,
)
from .errors import ClockRegression, EngineError, ParseError
from .geom import DisplayBounds, Point, Rect, Size
from .lasso import BorderSelection, push_sample
from .occlusion import (
    UnobscurePlan,
    UnobscureStrategy,
    apply_plan,
    end_action,
    plan_unobscure,
)
from .reflow import ReflowReport, reflow
from .resize import LimitFeedback, resize_drag
from .visibility import Transition, expose, set_mode, tick

DEFAULT_DISPLAY = DisplayBounds(800, 600)

RECORD_KINDS = frozenset(
    {
        "create", "destroy", "pointer", "button", "key", "display", "set_mode",
        "expose", "resize", "unobscure", "begin_action", "end_action", "tick",
        "snapshot",
    }
)

_PAYLOAD_KEYS = {
    "create": frozenset(
        {"min_w", "min_h", "max_w", "max_h", "x", "y", "w", "h", "anchor", "components"}
    ),
    "destroy": frozenset({"id"}),
    "pointer": frozenset({"x", "y"}),
    "button": frozenset({"action"}),
    "key": frozenset({"combo"}),
    "display": frozenset({"w", "h"}),
    "set_mode": frozenset({"id", "mode"}),
    "expose": frozenset({"id"}),
    "resize": frozenset({"id", "edge", "dx", "dy"}),
    "unobscure": frozenset({"target", "protected", "strategy"}),
    "begin_action": frozenset(),
    "end_action": frozenset({"id"}),
    "tick": frozenset(),
    "snapshot": frozenset(),
}

_COMPONENT_KEYS = frozenset({"name", "w", "h", "required", "priority"})


@dataclass(frozen=True)
class TraceRecord:
    t: int
    kind: str
    payload: dict
    line_no: int


def _require_int(payload: dict, key: str, line_no: int) -> int:
    value = payload.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(line_no, f"{key!r} must be an integer")
    return value


def _require_str(payload: dict, key: str, line_no: int) -> str:
    value = payload.get(key)
    if not isinstance(value, str):
        raise ParseError(line_no, f"{key!r} must be a string")
    return value


def parse_record(line: str, line_no: int) -> TraceRecord:
    """Parse one trace line; key sets are enforced exactly."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(line_no, f"invalid JSON: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise ParseError(line_no, "record must be a JSON object")
    kind = obj.get("kind")
    if not isinstance(kind, str) or kind not in RECORD_KINDS:
        raise ParseError(line_no, f"unknown record kind {kind!r}")
    t = obj.get("t")
    if not isinstance(t, int) or isinstance(t, bool) or t < 0:
        raise ParseError(line_no, "'t' must be a non-negative integer")
    payload = {k: v for k, v in obj.items() if k not in ("t", "kind")}
    allowed = _PAYLOAD_KEYS[kind]
    keys = set(payload)
    optional = {"t_show"} if kind == "set_mode" else set()
    if not (allowed <= keys <= allowed | optional):
        raise ParseError(
            line_no, f"{kind} payload keys must be {sorted(allowed)}, got {sorted(keys)}"
        )
    _validate_payload(kind, payload, line_no)
    return TraceRecord(t=t, kind=kind, payload=payload, line_no=line_no)


def _validate_payload(kind: str, payload: dict, line_no: int) -> None:
    int_keys = {
        "create": ("min_w", "min_h", "max_w", "max_h", "x", "y", "w", "h"),
        "destroy": ("id",),
        "pointer": ("x", "y"),
        "display": ("w", "h"),
        "set_mode": ("id",),
        "expose": ("id",),
        "resize": ("id", "dx", "dy"),
        "unobscure": ("target", "protected"),
        "end_action": ("id",),
    }.get(kind, ())
    for key in int_keys:
        _require_int(payload, key, line_no)
    if kind == "create":
        _require_str(payload, "anchor", line_no)
        comps = payload.get("components")
        if not isinstance(comps, list) or not comps:
            raise ParseError(line_no, "'components' must be a non-empty list")
        for comp in comps:
            if not isinstance(comp, dict) or set(comp) != _COMPONENT_KEYS:
                raise ParseError(
                    line_no, f"component keys must be {sorted(_COMPONENT_KEYS)}"
                )
            if not isinstance(comp["name"], str):
                raise ParseError(line_no, "component 'name' must be a string")
            if not isinstance(comp["required"], bool):
                raise ParseError(line_no, "component 'required' must be a boolean")
            for key in ("w", "h", "priority"):
                _require_int(comp, key, line_no)
    elif kind == "button":
        if _require_str(payload, "action", line_no) not in ("both_down", "both_up"):
            raise ParseError(line_no, "'action' must be both_down or both_up")
    elif kind == "key":
        _require_str(payload, "combo", line_no)
    elif kind == "set_mode":
        mode = _require_str(payload, "mode", line_no)
        if mode not in {m.value for m in ModeKind}:
            raise ParseError(line_no, f"unknown mode {mode!r}")
        if "t_show" in payload:
            _require_int(payload, "t_show", line_no)
    elif kind == "resize":
        edge = _require_str(payload, "edge", line_no)
        if edge not in {e.value for e in Edge}:
            raise ParseError(line_no, f"unknown edge {edge!r}")
    elif kind == "unobscure":
        strategy = _require_str(payload, "strategy", line_no)
        if strategy not in {s.value for s in UnobscureStrategy}:
            raise ParseError(line_no, f"unknown strategy {strategy!r}")


def iter_records(lines: Iterable[str]) -> Iterator[TraceRecord]:
    for line_no, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        yield parse_record(stripped, line_no)


# --- canonical serialization -------------------------------------------------

def _dumps(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _rect_list(rect: Rect) -> list[int]:
    return [rect.x, rect.y, rect.w, rect.h]


def mode_string(mode: VisibilityMode) -> str:
    if mode.is_timed:
        return f"{mode.kind.value}:{mode.t_show}"
    return mode.kind.value


def phase_string(desktop: Desktop) -> str:
    phase = desktop.input.phase
    if phase.kind == ChordPhaseKind.IDLE:
        return "idle"
    if phase.kind == ChordPhaseKind.MOVING:
        return f"moving:{phase.window}"
    return f"resizing:{phase.window}:{phase.part.value}"


def snapshot_dict(desktop: Desktop) -> dict:
    """Canonical snapshot: fixed key order, windows sorted by id."""
    windows = []
    for window in desktop.windows_by_id():
        windows.append(
            {
                "id": window.id,
                "rect": _rect_list(window.rect),
                "z": window.z,
                "state": window.state.value,
                "mode": mode_string(window.mode),
                "components_visible": visible_component_count(window),
            }
        )
    return {
        "clock": desktop.clock,
        "display": [desktop.display.w, desktop.display.h],
        "windows": windows,
        "input": phase_string(desktop),
    }


def _feedback_event(t: int, feedback: LimitFeedback) -> dict:
    return {
        "t": t,
        "event": "limit_feedback",
        "window": feedback.window,
        "limited": feedback.limited_names(),
    }


def _selection_event(t: int, selection: BorderSelection) -> dict:
    return {
        "t": t,
        "event": "border_selected",
        "window": selection.window,
        "part": selection.part.value,
    }


def _transition_event(transition: Transition) -> dict:
    return {
        "t": transition.at,
        "event": "visibility_transition",
        "window": transition.window,
        "to": transition.to_state.value,
    }


def _reflow_event(t: int, report: ReflowReport) -> dict:
    return {
        "t": t,
        "event": "reflow",
        "display": [report.display.w, report.display.h],
        "windows": [
            {
                "window": e.window,
                "old_rect": _rect_list(e.old_rect),
                "new_rect": _rect_list(e.new_rect),
                "shrunk_to_min": e.shrunk_to_min,
                "moved_into_area": e.moved_into_area,
                "components_visible": e.components_visible,
            }
            for e in report.entries
        ],
    }


def _plan_event(t: int, strategy: str, plan: UnobscurePlan) -> dict:
    event = {
        "t": t,
        "event": "plan",
        "target": plan.target,
        "strategy": strategy,
        "action": plan.action.kind.value,
    }
    if plan.action.rect is not None:
        event["rect"] = _rect_list(plan.action.rect)
    event["residual_overlap"] = plan.residual_overlap
    return event


def _error_event(t: int, line_no: int, exc: Exception) -> dict:
    kind = exc.kind if isinstance(exc, EngineError) else "BadValue"
    return {
        "t": t,
        "event": "error",
        "line": line_no,
        "error": kind,
        "detail": str(exc),
    }


# --- replay ------------------------------------------------------------------

class ReplaySession:
    """Applies trace records to a desktop, collecting canonical output lines.

    The session tracks the last known pointer location: button and key
    records act at that point, and pointer records are turned into deltas
    for an active move/resize or into lasso samples otherwise.
    """

    def __init__(
        self,
        display: DisplayBounds = DEFAULT_DISPLAY,
        lasso_config: LassoConfig | None = None,
    ):
        self.desktop = Desktop(display=display)
        if lasso_config is not None:
            self.desktop.lasso.config = lasso_config
        self.pointer = Point(0, 0)

    def apply(self, record: TraceRecord) -> tuple[list[str], str | None]:
        """Apply one record; returns (output event lines, snapshot line or None)."""
        if record.t < self.desktop.clock:
            raise ClockRegression(
                f"line {record.line_no}: t={record.t} before clock {self.desktop.clock}"
            )
        events = [_dumps(_transition_event(tr)) for tr in tick(self.desktop, record.t)]
        snapshot_line = None
        try:
            events.extend(_dumps(e) for e in self._dispatch(record))
        except (EngineError, ValueError) as exc:
            events.append(_dumps(_error_event(record.t, record.line_no, exc)))
        if record.kind == "snapshot":
            snapshot_line = _dumps(snapshot_dict(self.desktop))
        return events, snapshot_line

    def _dispatch(self, record: TraceRecord) -> list[dict]:
        p = record.payload
        t = record.t
        kind = record.kind
        desktop = self.desktop
        if kind == "create":
            components = [
                WindowComponent(
                    name=c["name"], w=c["w"], h=c["h"],
                    required=c["required"], priority=c["priority"],
                )
                for c in p["components"]
            ]
            create_window(
                desktop,
                rect=Rect(p["x"], p["y"], p["w"], p["h"]),
                min_size=Size(p["min_w"], p["min_h"]),
                max_size=Size(p["max_w"], p["max_h"]),
                components=components,
                anchor=Anchor(p["anchor"]),
            )
            return []
        if kind == "destroy":
            destroy_window(desktop, p["id"])
            return []
        if kind == "pointer":
            return self._on_pointer(t, Point(p["x"], p["y"]))
        if kind == "button":
            event = (
                chord.BothButtonsDown(self.pointer)
                if p["action"] == "both_down"
                else chord.BothButtonsUp()
            )
            return self._chord_events(t, chord.handle_chord_input(desktop, event))
        if kind == "key":
            changes = chord.handle_chord_input(
                desktop, chord.KeyCombo(p["combo"], self.pointer)
            )
            return self._chord_events(t, changes)
        if kind == "display":
            report = reflow(desktop, DisplayBounds(p["w"], p["h"]))
            return [_reflow_event(t, report)]
        if kind == "set_mode":
            set_mode(desktop, p["id"], VisibilityMode(ModeKind(p["mode"]), p.get("t_show")))
            return []
        if kind == "expose":
            expose(desktop, p["id"])
            return []
        if kind == "resize":
            _, feedback = resize_drag(desktop, p["id"], Edge(p["edge"]), p["dx"], p["dy"])
            return [_feedback_event(t, feedback)] if feedback else []
        if kind == "unobscure":
            plan = plan_unobscure(
                desktop, p["target"], p["protected"], UnobscureStrategy(p["strategy"])
            )
            apply_plan(desktop, plan)
            return [_plan_event(t, p["strategy"], plan)]
        if kind == "end_action":
            end_action(desktop, p["id"])
            return []
        # begin_action is a marker, tick and snapshot carry no dispatch.
        return []

    def _on_pointer(self, t: int, point: Point) -> list[dict]:
        desktop = self.desktop
        dx, dy = point.x - self.pointer.x, point.y - self.pointer.y
        self.pointer = point
        if desktop.input.phase.kind != ChordPhaseKind.IDLE:
            changes = chord.handle_chord_input(desktop, chord.PointerMove(dx, dy))
            return self._chord_events(t, changes)
        selection = push_sample(desktop, t, point)
        if selection is None:
            return []
        chord.arm_resize(desktop, selection.window, selection.part)
        return [_selection_event(t, selection)]

    def _chord_events(self, t: int, changes: list[chord.StateChange]) -> list[dict]:
        events = []
        for change in changes:
            if isinstance(change, chord.Resized) and change.feedback is not None:
                events.append(_feedback_event(t, change.feedback))
        return events

    def snapshot_line(self) -> str:
        return _dumps(snapshot_dict(self.desktop))


@dataclass
class ReplayResult:
    snapshots: list[str] = field(default_factory=list)
    events: list[str] = field(default_factory=list)


def replay(
    lines: Iterable[str],
    display: DisplayBounds = DEFAULT_DISPLAY,
    lasso_config: LassoConfig | None = None,
) -> ReplayResult:
    """Replay a whole trace; returns canonical snapshot and event lines."""
    session = ReplaySession(display=display, lasso_config=lasso_config)
    result = ReplayResult()
    for record in iter_records(lines):
        events, snapshot = session.apply(record)
        result.events.extend(events)
        if snapshot is not None:
            result.snapshots.append(snapshot)
    return result


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    message: str
    mismatch_index: int | None = None


def verify(trace_lines: Iterable[str], golden_snapshots: list[str]) -> VerifyReport:
    """Replay a trace and byte-compare its snapshots against a golden set."""
    result = replay(trace_lines)
    got = result.snapshots
    if len(got) != len(golden_snapshots):
        return VerifyReport(
            ok=False,
            message=(
                f"snapshot count mismatch: replay produced {len(got)}, "
                f"golden has {len(golden_snapshots)}"
            ),
        )
    for i, (ours, golden) in enumerate(zip(got, golden_snapshots)):
        if ours != golden:
            return VerifyReport(
                ok=False,
                message=f"snapshot {i + 1} diverges:\n  replay: {ours}\n  golden: {golden}",
                mismatch_index=i,
            )
    return VerifyReport(ok=True, message=f"{len(got)} snapshots match")
