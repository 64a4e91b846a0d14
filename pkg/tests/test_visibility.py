"""Visibility modes: timed hiding, timed iconify, locking, exposure round-trips."""

from __future__ import annotations

import random

import pytest

from panekit import (
    Rect,
    UnobscureStrategy,
    VisibilityMode,
    WindowState,
    expose,
    plan_unobscure,
    set_mode,
    tick,
)
from panekit.core import ICON_SIZE
from panekit.errors import AlreadyExposed, ClockRegression, LockedTarget

from conftest import add_window


def test_normal_mode_never_hides(desktop):
    wid = add_window(desktop, 0, 0, 100, 100)
    for t in (100, 1000, 100000):
        assert tick(desktop, t) == []
    assert desktop.windows[wid].state == WindowState.EXPOSED


def test_set_timed_on_exposed_window_stamps_clock(desktop):
    wid = add_window(desktop, 0, 0, 100, 100)
    tick(desktop, 400)
    set_mode(desktop, wid, VisibilityMode.timed(1000))
    assert desktop.windows[wid].exposure_started == 400


def test_timed_window_hides_at_inclusive_deadline(desktop):
    wid = add_window(desktop, 0, 0, 100, 100)
    set_mode(desktop, wid, VisibilityMode.timed(1000))
    assert tick(desktop, 999) == []
    assert desktop.windows[wid].state == WindowState.EXPOSED
    transitions = tick(desktop, 1000)
    assert [(tr.window, tr.to_state) for tr in transitions] == [
        (wid, WindowState.INVISIBLE)
    ]
    assert desktop.windows[wid].state == WindowState.INVISIBLE


def test_transition_fires_exactly_once(desktop):
    wid = add_window(desktop, 0, 0, 100, 100)
    set_mode(desktop, wid, VisibilityMode.timed(100))
    assert len(tick(desktop, 100)) == 1
    assert tick(desktop, 200) == []
    assert tick(desktop, 300) == []


def test_timed_icon_window_iconifies_past_deadline(desktop):
    wid = add_window(desktop, 30, 40, 120, 100)
    set_mode(desktop, wid, VisibilityMode.timed_icon(200))
    transitions = tick(desktop, 1000)
    assert [(tr.window, tr.to_state) for tr in transitions] == [(wid, WindowState.ICON)]
    window = desktop.windows[wid]
    assert window.saved_rect == Rect(30, 40, 120, 100)
    assert window.rect == Rect(0, 600 - ICON_SIZE, ICON_SIZE, ICON_SIZE)


def test_expose_invisible_timed_window_rehides_later(desktop):
    wid = add_window(desktop, 0, 0, 100, 100)
    set_mode(desktop, wid, VisibilityMode.timed(500))
    tick(desktop, 500)
    tick(desktop, 100 + 500)  # clock moves on while hidden
    assert desktop.windows[wid].state == WindowState.INVISIBLE
    expose(desktop, wid)
    assert desktop.windows[wid].state == WindowState.EXPOSED
    assert desktop.windows[wid].exposure_started == 600
    assert tick(desktop, 1099) == []
    assert len(tick(desktop, 1100)) == 1
    assert desktop.windows[wid].state == WindowState.INVISIBLE


def test_expose_icon_restores_saved_rect(desktop):
    wid = add_window(desktop, 25, 35, 150, 90)
    set_mode(desktop, wid, VisibilityMode.timed_icon(100))
    tick(desktop, 100)
    expose(desktop, wid)
    window = desktop.windows[wid]
    assert window.state == WindowState.EXPOSED
    assert window.rect == Rect(25, 35, 150, 90)
    assert window.saved_rect is None


def test_expose_already_exposed_fails(desktop):
    wid = add_window(desktop, 0, 0, 100, 100)
    with pytest.raises(AlreadyExposed):
        expose(desktop, wid)


def test_locked_window_is_raised_and_protected(desktop):
    locked = add_window(desktop, 0, 0, 100, 100)
    other = add_window(desktop, 0, 0, 100, 100)
    set_mode(desktop, locked, VisibilityMode.locked())
    assert desktop.z_order == [other, locked]
    with pytest.raises(LockedTarget):
        plan_unobscure(desktop, locked, other, UnobscureStrategy.AUTO)


def test_locked_window_never_ticks_away(desktop):
    wid = add_window(desktop, 0, 0, 100, 100)
    set_mode(desktop, wid, VisibilityMode.locked())
    tick(desktop, 10**9)
    assert desktop.windows[wid].state == WindowState.EXPOSED


def test_clock_regression_rejected(desktop):
    tick(desktop, 100)
    with pytest.raises(ClockRegression):
        tick(desktop, 99)


def test_tick_composition_equals_single_tick(desktop):
    """tick(a);tick(b) must equal tick(b) for a <= b, including transitions."""
    rng = random.Random(123)
    for _ in range(50):
        t_show = rng.randint(1, 300)
        a = rng.randint(0, 400)
        b = rng.randint(a, 500)

        one = add_window(desktop, 0, 0, 100, 100)
        set_mode(desktop, one, VisibilityMode.timed(t_show))
        base_clock = desktop.clock

        import copy

        split = copy.deepcopy(desktop)
        merged = copy.deepcopy(desktop)
        trans_split = tick(split, base_clock + a) + tick(split, base_clock + b)
        trans_merged = tick(merged, base_clock + b)
        assert split.windows[one].state == merged.windows[one].state
        assert [(tr.window, tr.to_state) for tr in trans_split] == [
            (tr.window, tr.to_state) for tr in trans_merged
        ]
        # fold the live desktop forward so ids and clocks keep advancing
        tick(desktop, base_clock + b)


def test_transitions_report_in_id_order(desktop):
    wids = [add_window(desktop, 0, 0, 100, 100) for _ in range(5)]
    for wid in reversed(wids):
        set_mode(desktop, wid, VisibilityMode.timed(50))
    transitions = tick(desktop, 50)
    assert [tr.window for tr in transitions] == wids


def test_icon_tray_packs_in_id_order(desktop):
    a = add_window(desktop, 0, 0, 100, 100)
    b = add_window(desktop, 10, 10, 100, 100)
    c = add_window(desktop, 20, 20, 100, 100)
    for wid in (c, a, b):
        set_mode(desktop, wid, VisibilityMode.timed_icon(10))
    tick(desktop, 10)
    tray_y = 600 - ICON_SIZE
    assert desktop.windows[a].rect == Rect(0, tray_y, ICON_SIZE, ICON_SIZE)
    assert desktop.windows[b].rect == Rect(ICON_SIZE, tray_y, ICON_SIZE, ICON_SIZE)
    assert desktop.windows[c].rect == Rect(2 * ICON_SIZE, tray_y, ICON_SIZE, ICON_SIZE)
    # Exposing the first icon shifts the remaining slots left.
    expose(desktop, a)
    assert desktop.windows[b].rect == Rect(0, tray_y, ICON_SIZE, ICON_SIZE)
    assert desktop.windows[c].rect == Rect(ICON_SIZE, tray_y, ICON_SIZE, ICON_SIZE)
