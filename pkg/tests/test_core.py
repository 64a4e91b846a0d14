"""Desktop model: ids, z-order, hit testing, exact occlusion measurement."""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest

from panekit import (
    Desktop,
    Point,
    Rect,
    Size,
    WindowComponent,
    WindowState,
    create_window,
    destroy_window,
    hit_test,
    occluded_fraction,
    raise_window,
)
from panekit.errors import BadLimits, BadRect, NoSuchWindow

from conftest import add_window, make_desktop


def rasterized_occlusion(desktop: Desktop, wid: int) -> Fraction:
    """Per-pixel oracle: paint every exposed higher-z window over the target."""
    target = desktop.windows[wid]
    r = target.rect
    mask = np.zeros((r.h, r.w), dtype=bool)
    for other in desktop.windows.values():
        if other.id == wid or other.state != WindowState.EXPOSED or other.z <= target.z:
            continue
        x1 = max(other.rect.x, r.x) - r.x
        y1 = max(other.rect.y, r.y) - r.y
        x2 = min(other.rect.x2, r.x2) - r.x
        y2 = min(other.rect.y2, r.y2) - r.y
        if x1 < x2 and y1 < y2:
            mask[y1:y2, x1:x2] = True
    return Fraction(int(mask.sum()), r.w * r.h)


def hit_test_oracle(desktop: Desktop, p: Point) -> int | None:
    """Linear scan over all windows, picking the exposed hit with maximum z."""
    best = None
    for window in desktop.windows.values():
        if window.state != WindowState.EXPOSED:
            continue
        if not window.rect.contains_point(p):
            continue
        if best is None or window.z > best.z:
            best = window
    return best.id if best else None


def z_is_permutation(desktop: Desktop) -> bool:
    return sorted(desktop.z_order) == sorted(desktop.windows) and all(
        desktop.windows[wid].z == rank for rank, wid in enumerate(desktop.z_order)
    )


def test_ids_are_sequential_from_one(desktop):
    assert add_window(desktop, 0, 0, 100, 100) == 1
    assert add_window(desktop, 10, 10, 100, 100) == 2
    assert desktop.z_order == [1, 2]


def test_ids_never_reused(desktop):
    a = add_window(desktop, 0, 0, 100, 100)
    destroy_window(desktop, a)
    assert add_window(desktop, 0, 0, 100, 100) == a + 1


def test_create_rejects_min_over_max(desktop):
    with pytest.raises(BadLimits):
        add_window(desktop, 0, 0, 90, 90, min_size=Size(100, 50), max_size=Size(80, 500))


def test_create_rejects_rect_outside_limits(desktop):
    with pytest.raises(BadRect):
        add_window(desktop, 0, 0, 50, 50, min_size=Size(100, 100))


def test_create_raises_min_size_to_content_floor(desktop):
    # A 40x20 required button plus chrome needs 44x44; a smaller declared
    # minimum is lifted to it.
    wid = add_window(desktop, 0, 0, 100, 100, min_size=Size(10, 10))
    assert desktop.windows[wid].min_size == Size(44, 44)


def test_raise_moves_to_top_preserving_others(desktop):
    for _ in range(3):
        add_window(desktop, 0, 0, 100, 100)
    raise_window(desktop, 1)
    assert desktop.z_order == [2, 3, 1]
    assert z_is_permutation(desktop)


def test_raise_top_window_is_noop(desktop):
    for _ in range(3):
        add_window(desktop, 0, 0, 100, 100)
    raise_window(desktop, 3)
    assert desktop.z_order == [1, 2, 3]


def test_raise_is_idempotent(desktop):
    for _ in range(4):
        add_window(desktop, 0, 0, 100, 100)
    raise_window(desktop, 2)
    once = list(desktop.z_order)
    raise_window(desktop, 2)
    assert desktop.z_order == once


def test_raise_unknown_window(desktop):
    with pytest.raises(NoSuchWindow):
        raise_window(desktop, 99)


def test_hit_test_single_window(desktop):
    wid = add_window(desktop, 10, 10, 100, 100)
    assert hit_test(desktop, Point(50, 50)) == wid
    assert hit_test(desktop, Point(500, 500)) is None


def test_hit_test_prefers_higher_z(desktop):
    add_window(desktop, 0, 0, 100, 100)
    top = add_window(desktop, 0, 0, 100, 100)
    assert hit_test(desktop, Point(10, 10)) == top


def test_hit_test_skips_invisible(desktop):
    wid = add_window(desktop, 0, 0, 100, 100)
    desktop.windows[wid].state = WindowState.INVISIBLE
    assert hit_test(desktop, Point(10, 10)) is None


def test_hit_test_half_open_boundaries(desktop):
    wid = add_window(desktop, 10, 10, 100, 100)
    assert hit_test(desktop, Point(10, 10)) == wid
    assert hit_test(desktop, Point(110, 10)) is None
    assert hit_test(desktop, Point(10, 110)) is None


def test_occlusion_single_window_is_zero(desktop):
    wid = add_window(desktop, 0, 0, 100, 100)
    assert occluded_fraction(desktop, wid) == 0


def test_occlusion_fully_covered(desktop):
    below = add_window(desktop, 10, 10, 50, 50)
    add_window(desktop, 0, 0, 100, 100)
    assert occluded_fraction(desktop, below) == 1


def test_occlusion_half_covered(desktop):
    # Frozen from the rasterization oracle: a 10x5 strip over a 10x10
    # window covers exactly half of it.
    below = add_window(desktop, 20, 20, 100, 100)
    add_window(desktop, 20, 20, 100, 50)
    assert occluded_fraction(desktop, below) == Fraction(1, 2)
    assert rasterized_occlusion(desktop, below) == Fraction(1, 2)


def test_occlusion_overlapping_covers_not_double_counted(desktop):
    below = add_window(desktop, 0, 0, 100, 100)
    add_window(desktop, 0, 0, 80, 100)
    add_window(desktop, 0, 0, 60, 100)
    assert occluded_fraction(desktop, below) == Fraction(80, 100)


def _random_desktop(rng: random.Random, max_windows: int = 8) -> Desktop:
    desktop = make_desktop(200, 200)
    for _ in range(rng.randint(1, max_windows)):
        w = rng.randint(44, 150)
        h = rng.randint(44, 150)
        x = rng.randint(0, 200 - w)
        y = rng.randint(0, 200 - h)
        add_window(desktop, x, y, w, h)
    return desktop


def test_occlusion_matches_rasterization_oracle_on_random_desktops():
    rng = random.Random(20260810)
    for _ in range(150):
        desktop = _random_desktop(rng)
        for wid in desktop.windows:
            assert occluded_fraction(desktop, wid) == rasterized_occlusion(desktop, wid)


def test_hit_test_matches_linear_oracle_on_random_desktops():
    rng = random.Random(4096)
    for _ in range(100):
        desktop = _random_desktop(rng)
        for _ in range(20):
            p = Point(rng.randint(-5, 205), rng.randint(-5, 205))
            assert hit_test(desktop, p) == hit_test_oracle(desktop, p)


def test_z_permutation_invariant_across_operations():
    rng = random.Random(7)
    desktop = make_desktop()
    live = []
    for _ in range(200):
        op = rng.random()
        if op < 0.5 or not live:
            live.append(add_window(desktop, 0, 0, 100, 100))
        elif op < 0.8:
            raise_window(desktop, rng.choice(live))
        else:
            wid = live.pop(rng.randrange(len(live)))
            destroy_window(desktop, wid)
        assert z_is_permutation(desktop)


def test_component_validation():
    with pytest.raises(BadLimits):
        WindowComponent(name="bad", w=0, h=10, required=True, priority=1)


def test_create_requires_a_required_component(desktop):
    from panekit.errors import NoRequiredComponent

    optional = WindowComponent(name="opt", w=10, h=10, required=False, priority=1)
    with pytest.raises(NoRequiredComponent):
        create_window(
            desktop,
            rect=Rect(0, 0, 100, 100),
            min_size=Size(44, 44),
            max_size=Size(400, 400),
            components=(optional,),
        )
