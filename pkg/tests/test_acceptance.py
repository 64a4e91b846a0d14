"""Acceptance gate: one test per release criterion, each printing a verdict line.

Every criterion is property-based at desk scale and runs against an
independent oracle (rasterization, 1-px placement scan, parametric
crossing search, schedule simulation) or against the bundled golden
corpus. Tolerances are zero throughout: the engine is integer-exact.
"""

from __future__ import annotations

import copy
import random
import time
from dataclasses import asdict
from pathlib import Path

from panekit import (
    Anchor,
    Desktop,
    DisplayBounds,
    Edge,
    LassoConfig,
    Size,
    UnobscureStrategy,
    VisibilityMode,
    apply_plan,
    end_action,
    min_rect,
    occluded_fraction,
    plan_unobscure,
    push_sample,
    reflow,
    resize_drag,
    set_mode,
    tick,
    verify,
)
from panekit.errors import DisplayTooSmall
from panekit.geom import within_bounds
from panekit.occlusion import ActionKind
from panekit.trace import replay

from conftest import add_window, make_desktop
from test_core import rasterized_occlusion
from test_lasso import LassoOracle, _random_trajectory
from test_occlusion import overlap_field

TRACES_DIR = Path(__file__).resolve().parent.parent / "traces"


def report(number: int, description: str, ok: bool) -> None:
    print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {description}")
    assert ok, f"criterion {number} failed: {description}"


def test_criterion_1_resize_feedback_iff_contract():
    """Feedback iff clamped, limits always hold, 10k calls under 5 s."""
    rng = random.Random(0xFEED)
    started = time.monotonic()
    desk = make_desktop(2000, 2000)
    windows = []
    for _ in range(40):
        min_w, min_h = rng.randint(44, 120), rng.randint(44, 120)
        max_w = rng.randint(min_w, 600)
        max_h = rng.randint(min_h, 600)
        w = rng.randint(min_w, max_w)
        h = rng.randint(min_h, max_h)
        wid = add_window(
            desk, rng.randint(0, 500), rng.randint(0, 500), w, h,
            min_size=Size(min_w, min_h), max_size=Size(max_w, max_h),
        )
        windows.append(wid)
    violations = 0
    edges = list(Edge)
    for _ in range(10_000):
        wid = rng.choice(windows)
        window = desk.windows[wid]
        edge = rng.choice(edges)
        dx, dy = rng.randint(-500, 500), rng.randint(-500, 500)
        before = window.rect
        req_w, req_h = before.w, before.h
        if edge.moves_right:
            req_w = before.w + dx
        elif edge.moves_left:
            req_w = before.w - dx
        if edge.moves_bottom:
            req_h = before.h + dy
        elif edge.moves_top:
            req_h = before.h - dy
        applied, feedback = resize_drag(desk, wid, edge, dx, dy)
        clamped = (req_w, req_h) != (applied.w, applied.h)
        if (feedback is not None) != clamped:
            violations += 1
        if not (
            window.min_size.w <= applied.w <= window.max_size.w
            and window.min_size.h <= applied.h <= window.max_size.h
        ):
            violations += 1
    elapsed = time.monotonic() - started
    ok = violations == 0 and elapsed < 5.0
    report(1, f"resize feedback iff-contract (10k calls, {elapsed:.2f}s)", ok)


def test_criterion_2_occlusion_equals_rasterization_oracle():
    """occluded_fraction is integer-exact against per-pixel rasterization."""
    rng = random.Random(0x0CC1)
    mismatches = 0
    for _ in range(1000):
        desk = make_desktop(200, 200)
        for _ in range(rng.randint(1, 8)):
            w = rng.randint(44, 200)
            h = rng.randint(44, 200)
            add_window(
                desk, rng.randint(0, 200 - w), rng.randint(0, 200 - h), w, h
            )
        for wid in desk.windows:
            if occluded_fraction(desk, wid) != rasterized_occlusion(desk, wid):
                mismatches += 1
    report(2, "occlusion fraction matches rasterization oracle on 1000 desks",
           mismatches == 0)


def _random_small_desk(rng: random.Random) -> tuple[Desktop, list[int]]:
    desk = make_desktop(200, 200)
    wids = []
    for _ in range(rng.randint(2, 5)):
        w = rng.randint(44, 140)
        h = rng.randint(44, 140)
        wids.append(
            add_window(desk, rng.randint(0, 200 - w), rng.randint(0, 200 - h), w, h)
        )
    return desk, wids


def test_criterion_3_moveaway_feasibility_and_round_trips():
    """Grid planner reaches residual 0 whenever the 1-px oracle says a
    grid-aligned zero-overlap cell exists; hide/reduce round-trips are exact."""
    rng = random.Random(0x3A11)
    failures = 0
    for _ in range(500):
        desk, wids = _random_small_desk(rng)
        target, protected = rng.sample(wids, 2)
        plan = plan_unobscure(desk, target, protected, UnobscureStrategy.MOVE_AWAY)
        field = overlap_field(
            desk.display, desk.windows[target].rect, desk.windows[protected].rect
        )
        if field is not None and (field[0::8, 0::8] == 0).any():
            if plan.residual_overlap != 0:
                failures += 1
        # Disappear round-trip.
        before = asdict(desk.windows[target])
        hide_plan = plan_unobscure(
            desk, target, protected, UnobscureStrategy.DISAPPEAR
        )
        apply_plan(desk, hide_plan)
        if hide_plan.action.kind == ActionKind.HIDE_UNTIL_ACTION_END:
            end_action(desk, target)
        if asdict(desk.windows[target]) != before:
            failures += 1
        # Reduce round-trip.
        reduce_plan = plan_unobscure(
            desk, target, protected, UnobscureStrategy.REDUCE
        )
        apply_plan(desk, reduce_plan)
        if reduce_plan.action.kind == ActionKind.REDUCE_TO:
            end_action(desk, target)
        if asdict(desk.windows[target]) != before:
            failures += 1
    report(3, "move-away feasibility + disappear/reduce round-trips (500 desks)",
           failures == 0)


def test_criterion_4_lasso_matches_bruteforce_oracle():
    """Fire/no-fire equals the brute-force oracle on 2000 trajectories."""
    rng = random.Random(0x1A550)
    mismatches = 0
    stale = 0
    for _ in range(2000):
        desk = make_desktop(400, 300)
        config = LassoConfig(
            n_max=rng.choice((8, 16, 32)),
            t_lasso=rng.choice((200, 500, 800)),
            proximity_d=rng.choice((12, 24, 40)),
        )
        desk.lasso.config = config
        wids = [
            add_window(
                desk,
                rng.randint(0, 200),
                rng.randint(0, 150),
                rng.randint(60, 180),
                rng.randint(60, 140),
            )
            for _ in range(rng.randint(1, 3))
        ]
        oracle = LassoOracle(config)
        around = desk.windows[rng.choice(wids)].rect
        shadow: list[int] = []
        t_prev = 0
        for t, p in _random_trajectory(rng, around):
            t = max(t, t_prev)
            t_prev = t
            shadow.append(t)
            shadow = [s for s in shadow if t - s <= config.t_lasso]
            shadow = shadow[-config.n_max:]
            got = push_sample(desk, t, p)
            want = oracle.push(desk, t, p)
            if (got is None) != (want is None):
                mismatches += 1
            elif got is not None and (got.window, got.part) != want:
                mismatches += 1
            if got is not None:
                if t - min(shadow) > config.t_lasso:
                    stale += 1
                shadow.clear()
    report(4, "lasso decisions match brute-force oracle on 2000 trajectories",
           mismatches == 0 and stale == 0)


def test_criterion_5_reflow_safety():
    """Contained and at/above minimum content after 500 random reflows;
    identity on same bounds; fitting fixed windows untouched."""
    rng = random.Random(0x5AFE)
    violations = 0
    checked = 0
    while checked < 500:
        desk = make_desktop(rng.randint(200, 800), rng.randint(200, 800))
        for _ in range(rng.randint(1, 6)):
            w = rng.randint(44, desk.display.w)
            h = rng.randint(44, desk.display.h)
            add_window(
                desk,
                rng.randint(0, desk.display.w - w),
                rng.randint(0, desk.display.h - h),
                w, h,
                anchor=rng.choice((Anchor.FIXED, Anchor.PROPORTIONAL)),
            )
        new_display = DisplayBounds(rng.randint(44, 900), rng.randint(44, 900))
        fixed_fitting = {
            wid: asdict(win)
            for wid, win in desk.windows.items()
            if win.anchor == Anchor.FIXED and within_bounds(win.rect, new_display)
        }
        identity_rects = {wid: win.rect for wid, win in desk.windows.items()}
        same = copy.deepcopy(desk)
        try:
            reflow(desk, new_display)
        except DisplayTooSmall:
            continue
        checked += 1
        for wid, window in desk.windows.items():
            floor = min_rect(window)
            if not within_bounds(window.rect, new_display):
                violations += 1
            if window.rect.w < floor.w or window.rect.h < floor.h:
                violations += 1
            if wid in fixed_fitting and asdict(window) != fixed_fitting[wid]:
                violations += 1
        reflow(same, same.display)
        if {wid: win.rect for wid, win in same.windows.items()} != identity_rects:
            violations += 1
    report(5, "reflow safety on 500 desk/display pairs", violations == 0)


def test_criterion_6_timed_mode_exactness():
    """Transitions at the first tick past the deadline, exactly once;
    split ticks compose to the same result as one big tick."""
    rng = random.Random(0x71ED)
    failures = 0
    for _ in range(200):
        desk = make_desktop()
        wid = add_window(desk, 0, 0, 100, 100)
        t_show = rng.randint(1, 500)
        mode = rng.choice((VisibilityMode.timed, VisibilityMode.timed_icon))
        set_mode(desk, wid, mode(t_show))
        deadline = desk.clock + t_show
        schedule = sorted(rng.randint(0, 1200) for _ in range(rng.randint(1, 12)))
        expected_at = next((t for t in schedule if t >= deadline), None)
        fired = []
        for t in schedule:
            fired.extend(tick(desk, t))
        if expected_at is None:
            if fired:
                failures += 1
        elif [tr.at for tr in fired] != [expected_at]:
            failures += 1
        # Composition: tick(a);tick(b) == tick(b).
        a = rng.randint(0, 600)
        b = rng.randint(a, 1200)
        fresh = make_desktop()
        wid = add_window(fresh, 0, 0, 100, 100)
        set_mode(fresh, wid, mode(t_show))
        merged = copy.deepcopy(fresh)
        split_fired = tick(fresh, a) + tick(fresh, b)
        merged_fired = tick(merged, b)
        if [(tr.window, tr.to_state) for tr in split_fired] != [
            (tr.window, tr.to_state) for tr in merged_fired
        ]:
            failures += 1
        if fresh.windows[wid].state != merged.windows[wid].state:
            failures += 1
    report(6, "timed-mode transitions exact on 200 schedules", failures == 0)


def test_criterion_7_golden_corpus_replay_determinism():
    """Corpus of bundled traces replays byte-identically, twice, and
    matches the committed goldens."""
    traces = sorted(TRACES_DIR.glob("*.trace"))
    assert len(traces) >= 12, f"corpus has only {len(traces)} traces"
    problems = []
    for trace_path in traces:
        lines = trace_path.read_text(encoding="utf-8").splitlines()
        first = replay(lines)
        second = replay(lines)
        if first.snapshots != second.snapshots or first.events != second.events:
            problems.append(f"{trace_path.name}: non-deterministic replay")
            continue
        golden_dir = TRACES_DIR / "golden" / trace_path.stem
        golden = [
            line
            for line in (golden_dir / "snapshots.txt")
            .read_text(encoding="utf-8")
            .splitlines()
            if line
        ]
        outcome = verify(lines, golden)
        if not outcome.ok:
            problems.append(f"{trace_path.name}: {outcome.message}")
        golden_events = [
            line
            for line in (golden_dir / "events.txt")
            .read_text(encoding="utf-8")
            .splitlines()
            if line
        ]
        if first.events != golden_events:
            problems.append(f"{trace_path.name}: events diverge from golden")
    report(7, f"golden corpus determinism ({len(traces)} traces)", not problems)
    assert not problems, problems
