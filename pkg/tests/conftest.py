"""Shared builders for engine tests."""

from __future__ import annotations

import pytest

from panekit import (
    Anchor,
    Desktop,
    DisplayBounds,
    Rect,
    Size,
    WindowComponent,
    create_window,
)

# One required 40x20 button: minimum content size is 44x44 with the
# engine's 2 px borders and 20 px title bar.
BUTTON = WindowComponent(name="ok", w=40, h=20, required=True, priority=1)


def make_desktop(w: int = 800, h: int = 600) -> Desktop:
    return Desktop(display=DisplayBounds(w, h))


def add_window(
    desktop: Desktop,
    x: int,
    y: int,
    w: int,
    h: int,
    *,
    min_size: Size | None = None,
    max_size: Size | None = None,
    components: tuple[WindowComponent, ...] = (BUTTON,),
    anchor: Anchor = Anchor.FIXED,
) -> int:
    return create_window(
        desktop,
        rect=Rect(x, y, w, h),
        min_size=min_size or Size(44, 44),
        max_size=max_size or Size(4000, 4000),
        components=components,
        anchor=anchor,
    )


@pytest.fixture
def desktop() -> Desktop:
    return make_desktop()
