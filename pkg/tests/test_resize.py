"""Border-drag clamping and the feedback iff-contract."""

from __future__ import annotations

import random

import pytest

from panekit import Edge, Limit, Rect, Size, WindowState, resize_drag
from panekit.errors import NoSuchWindow, NotExposed

from conftest import add_window


def limited(feedback):
    assert feedback is not None
    return set(feedback.limited)


def test_drag_right_within_limits(desktop):
    wid = add_window(desktop, 50, 50, 100, 100, max_size=Size(200, 200))
    applied, feedback = resize_drag(desktop, wid, Edge.RIGHT, 50, 0)
    assert applied == Rect(50, 50, 150, 100)
    assert feedback is None


def test_drag_right_clamps_to_max_width(desktop):
    wid = add_window(desktop, 50, 50, 100, 100, max_size=Size(200, 200))
    applied, feedback = resize_drag(desktop, wid, Edge.RIGHT, 150, 0)
    assert applied == Rect(50, 50, 200, 100)
    assert limited(feedback) == {Limit.MAX_WIDTH}


def test_drag_corner_clamps_both_minimums(desktop):
    wid = add_window(desktop, 50, 50, 100, 100, min_size=Size(80, 80))
    applied, feedback = resize_drag(desktop, wid, Edge.BOTTOM_RIGHT, -50, -50)
    assert (applied.w, applied.h) == (80, 80)
    assert limited(feedback) == {Limit.MIN_WIDTH, Limit.MIN_HEIGHT}


def test_left_drag_keeps_right_edge_fixed(desktop):
    wid = add_window(desktop, 100, 100, 120, 120)
    applied, feedback = resize_drag(desktop, wid, Edge.LEFT, 30, 0)
    assert applied == Rect(130, 100, 90, 120)
    assert applied.x2 == 220
    assert feedback is None


def test_left_drag_clamp_anchors_right_edge(desktop):
    wid = add_window(desktop, 100, 100, 120, 120, min_size=Size(100, 44))
    applied, feedback = resize_drag(desktop, wid, Edge.LEFT, 80, 0)
    assert applied == Rect(120, 100, 100, 120)
    assert limited(feedback) == {Limit.MIN_WIDTH}


def test_top_drag_keeps_bottom_edge_fixed(desktop):
    wid = add_window(desktop, 100, 100, 120, 120, max_size=Size(400, 200))
    applied, feedback = resize_drag(desktop, wid, Edge.TOP, 0, -100)
    assert applied == Rect(100, 20, 120, 200)
    assert applied.y2 == 220
    assert limited(feedback) == {Limit.MAX_HEIGHT}


def test_plain_edge_ignores_cross_axis_delta(desktop):
    wid = add_window(desktop, 50, 50, 100, 100)
    applied, feedback = resize_drag(desktop, wid, Edge.RIGHT, 20, 500)
    assert applied == Rect(50, 50, 120, 100)
    assert feedback is None


def test_zero_delta_is_noop_without_feedback(desktop):
    wid = add_window(desktop, 50, 50, 100, 100)
    before = desktop.windows[wid].rect
    applied, feedback = resize_drag(desktop, wid, Edge.BOTTOM_RIGHT, 0, 0)
    assert applied == before
    assert feedback is None


def test_resize_errors(desktop):
    with pytest.raises(NoSuchWindow):
        resize_drag(desktop, 9, Edge.RIGHT, 5, 0)
    wid = add_window(desktop, 0, 0, 100, 100)
    desktop.windows[wid].state = WindowState.INVISIBLE
    with pytest.raises(NotExposed):
        resize_drag(desktop, wid, Edge.RIGHT, 5, 0)


def test_feedback_iff_clamped_randomized(desktop):
    """Feedback fires exactly when the request was clamped; limits always hold."""
    rng = random.Random(99)
    edges = list(Edge)
    wid = add_window(
        desktop, 200, 200, 150, 150, min_size=Size(60, 60), max_size=Size(320, 320)
    )
    window = desktop.windows[wid]
    for _ in range(2000):
        edge = rng.choice(edges)
        dx = rng.randint(-500, 500)
        dy = rng.randint(-500, 500)
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
        applied, feedback = resize_drag(desktop, wid, edge, dx, dy)
        assert 60 <= applied.w <= 320 and 60 <= applied.h <= 320
        assert (feedback is not None) == ((req_w, req_h) != (applied.w, applied.h))
        # Opposite-edge anchoring.
        if edge.moves_left:
            assert applied.x2 == before.x2
        if edge.moves_right:
            assert applied.x == before.x
        if edge.moves_top:
            assert applied.y2 == before.y2
        if edge.moves_bottom:
            assert applied.y == before.y
        if not (edge.moves_left or edge.moves_right):
            assert (applied.x, applied.w) == (before.x, before.w)
        if not (edge.moves_top or edge.moves_bottom):
            assert (applied.y, applied.h) == (before.y, before.h)
