#!/usr/bin/env python3
"""Author the bundled trace corpus.

Each trace exercises one mechanism (or a composite) end to end. Run this
after changing the corpus definitions, then regenerate goldens with
tools/regen_goldens.sh and eyeball the diff.
"""

from __future__ import annotations

import json
from pathlib import Path

TRACES_DIR = Path(__file__).resolve().parent.parent / "traces"


def create(t, x, y, w, h, *, min_w=44, min_h=44, max_w=4000, max_h=4000,
           anchor="fixed", components=None):
    return {
        "t": t, "kind": "create",
        "min_w": min_w, "min_h": min_h, "max_w": max_w, "max_h": max_h,
        "x": x, "y": y, "w": w, "h": h, "anchor": anchor,
        "components": components
        or [{"name": "ok", "w": 40, "h": 20, "required": True, "priority": 1}],
    }


def r(t, kind, **payload):
    return {"t": t, "kind": kind, **payload}


CORPUS: dict[str, list[dict]] = {}

CORPUS["basic_stacking"] = [
    create(0, 10, 10, 200, 150),
    create(0, 50, 50, 200, 150),
    create(0, 90, 90, 200, 150),
    r(1, "snapshot"),
    # Clicking (chord) window 1 raises it.
    r(2, "pointer", x=20, y=20),
    r(3, "button", action="both_down"),
    r(4, "button", action="both_up"),
    r(5, "snapshot"),
    r(6, "destroy", id=2),
    r(7, "snapshot"),
]

CORPUS["resize_limits"] = [
    create(0, 50, 50, 100, 100, max_w=200, max_h=200, min_w=80, min_h=80),
    r(10, "resize", id=1, edge="right", dx=50, dy=0),
    r(11, "snapshot"),
    r(20, "resize", id=1, edge="right", dx=150, dy=0),
    r(21, "snapshot"),
    r(30, "resize", id=1, edge="bottom_right", dx=-150, dy=-150),
    r(31, "snapshot"),
]

CORPUS["resize_edges"] = [
    create(0, 100, 100, 120, 120, min_w=100, max_h=200),
    r(10, "resize", id=1, edge="left", dx=80, dy=0),
    r(11, "snapshot"),
    r(20, "resize", id=1, edge="top", dx=0, dy=-100),
    r(21, "snapshot"),
]

CORPUS["occlusion_moveaway"] = [
    create(0, 0, 0, 100, 100, max_w=400, max_h=400),
    create(0, 0, 0, 100, 100, max_w=400, max_h=400),
    r(1, "snapshot"),
    r(2, "unobscure", target=2, protected=1, strategy="move_away"),
    r(3, "snapshot"),
]

CORPUS["occlusion_disappear"] = [
    create(0, 0, 0, 200, 200),
    create(0, 40, 40, 200, 200),
    r(1, "begin_action"),
    r(2, "unobscure", target=2, protected=1, strategy="disappear"),
    r(3, "snapshot"),
    r(9, "end_action", id=2),
    r(10, "snapshot"),
]

CORPUS["occlusion_reduce"] = [
    create(0, 150, 100, 200, 200),
    create(0, 50, 50, 300, 300),
    r(1, "unobscure", target=2, protected=1, strategy="reduce"),
    r(2, "snapshot"),
    r(9, "end_action", id=2),
    r(10, "snapshot"),
]

# All three strategies in one session, against three protected windows.
CORPUS["occlusion_three_strategies"] = [
    create(0, 0, 0, 100, 100, max_w=400, max_h=400),
    create(0, 0, 0, 100, 100, max_w=400, max_h=400),
    r(1, "unobscure", target=2, protected=1, strategy="move_away"),
    r(2, "snapshot"),
    create(10, 200, 200, 180, 180),
    create(10, 260, 260, 200, 200),
    r(11, "unobscure", target=4, protected=3, strategy="reduce"),
    r(12, "snapshot"),
    create(20, 0, 0, 800, 600, max_w=800, max_h=600),
    create(20, 300, 200, 150, 150),
    r(21, "unobscure", target=6, protected=5, strategy="auto"),
    r(22, "snapshot"),
    r(30, "end_action", id=4),
    r(31, "end_action", id=6),
    r(32, "snapshot"),
]

CORPUS["chord_move"] = [
    create(0, 50, 50, 100, 100),
    r(10, "pointer", x=60, y=60),
    r(20, "button", action="both_down"),
    r(30, "pointer", x=160, y=110),
    r(40, "pointer", x=300, y=30),
    r(50, "button", action="both_up"),
    r(60, "snapshot"),
]

CORPUS["chord_resize_keycombo"] = [
    create(0, 100, 100, 100, 100, min_w=80, min_h=80, max_w=300, max_h=300),
    r(10, "pointer", x=195, y=195),
    r(20, "key", combo="resize"),
    r(30, "pointer", x=165, y=165),
    r(40, "pointer", x=100, y=100),
    r(50, "key", combo="escape"),
    r(60, "snapshot"),
]

CORPUS["reflow_shrink"] = [
    r(0, "display", w=1600, h=1200),
    create(1, 1200, 900, 300, 200),
    create(1, 0, 0, 600, 100),
    r(10, "display", w=800, h=600),
    r(11, "snapshot"),
    r(20, "display", w=400, h=300),
    r(21, "snapshot"),
]

CORPUS["reflow_grow"] = [
    create(0, 100, 100, 150, 100, max_w=400, max_h=400, anchor="proportional",
           components=[
               {"name": "ok", "w": 40, "h": 20, "required": True, "priority": 1},
               {"name": "list", "w": 100, "h": 30, "required": False, "priority": 2},
               {"name": "preview", "w": 60, "h": 40, "required": False, "priority": 3},
           ]),
    r(1, "snapshot"),
    r(10, "display", w=1600, h=1200),
    r(11, "snapshot"),
]

# A cursive "o" straddling the right border selects it for resizing; the
# oversized follow-up drag clamps and reports feedback through the armed mode.
CORPUS["lasso_o_gesture"] = [
    create(0, 100, 50, 100, 100, max_w=400, max_h=400),
    r(0, "pointer", x=180, y=95),
    r(100, "pointer", x=220, y=105),
    r(200, "pointer", x=180, y=119),
    r(201, "snapshot"),
    r(300, "pointer", x=230, y=119),
    r(400, "pointer", x=700, y=119),
    r(500, "key", combo="escape"),
    r(501, "snapshot"),
]

CORPUS["lasso_too_slow"] = [
    create(0, 100, 50, 100, 100),
    r(0, "pointer", x=180, y=95),
    r(100, "pointer", x=220, y=105),
    r(800, "pointer", x=180, y=119),
    r(801, "snapshot"),
    # A single straight pass is not a loop either.
    r(900, "pointer", x=150, y=100),
    r(950, "pointer", x=250, y=100),
    r(951, "snapshot"),
]

CORPUS["visibility_modes"] = [
    create(0, 10, 10, 150, 120),
    create(0, 200, 10, 150, 120),
    r(0, "set_mode", id=1, mode="timed", t_show=300),
    r(0, "set_mode", id=2, mode="timed_icon", t_show=500),
    r(299, "tick"),
    r(299, "snapshot"),
    r(300, "tick"),
    r(300, "snapshot"),
    r(500, "tick"),
    r(501, "snapshot"),
    r(600, "expose", id=1),
    r(700, "expose", id=2),
    r(701, "snapshot"),
    r(800, "set_mode", id=2, mode="locked"),
    r(801, "unobscure", target=2, protected=1, strategy="auto"),
    r(802, "snapshot"),
]

# The timed-mode composition scenario: set_mode stamps the exposure, the
# redundant expose soft-fails, the deadline tick hides the window.
CORPUS["timed_expose_scenario"] = [
    create(0, 10, 10, 150, 120),
    r(0, "set_mode", id=1, mode="timed", t_show=1000),
    r(0, "expose", id=1),
    r(1000, "tick"),
    r(1000, "snapshot"),
]

CORPUS["composite_session"] = [
    create(0, 20, 20, 200, 160, max_w=500, max_h=500),
    create(0, 300, 60, 220, 180, max_w=500, max_h=500),
    create(0, 90, 300, 180, 140, max_w=500, max_h=500, anchor="proportional"),
    r(5, "snapshot"),
    # Chord-move window 2 over window 1.
    r(10, "pointer", x=350, y=100),
    r(20, "button", action="both_down"),
    r(30, "pointer", x=120, y=80),
    r(40, "button", action="both_up"),
    r(45, "snapshot"),
    # Clamped resize produces feedback.
    r(50, "resize", id=2, edge="bottom_right", dx=600, dy=0),
    r(55, "snapshot"),
    # Unobscure the moved window from the one it now covers.
    r(60, "unobscure", target=2, protected=1, strategy="auto"),
    r(65, "snapshot"),
    # Lasso the right border of window 1 and widen it.
    r(70, "pointer", x=200, y=80),
    r(80, "pointer", x=240, y=90),
    r(90, "pointer", x=200, y=104),
    r(100, "pointer", x=260, y=104),
    r(110, "key", combo="escape"),
    r(115, "snapshot"),
    # Timed icon, expose, lock.
    r(120, "set_mode", id=3, mode="timed_icon", t_show=100),
    r(220, "tick"),
    r(225, "snapshot"),
    r(300, "expose", id=3),
    r(310, "set_mode", id=1, mode="locked"),
    r(315, "snapshot"),
    # Display reflow pulls everything into the smaller bounds.
    r(400, "display", w=500, h=400),
    r(405, "snapshot"),
    r(500, "destroy", id=2),
    r(505, "snapshot"),
]


def main() -> None:
    TRACES_DIR.mkdir(exist_ok=True)
    for name, records in CORPUS.items():
        path = TRACES_DIR / f"{name}.trace"
        path.write_text(
            "".join(json.dumps(record) + "\n" for record in records),
            encoding="utf-8",
        )
        print(f"wrote {path} ({len(records)} records)")


if __name__ == "__main__":
    main()
