"""Exact integer rectangle geometry.

All coordinates are integer pixels and all areas are exact integers, so
every geometric assertion in the engine is an equality check. Rectangles
are top-left anchored and half-open: the pixel column ``x + w`` and row
``y + h`` are excluded, which makes adjacent rectangles non-overlapping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DoesNotFit


@dataclass(frozen=True)
class Point:
    x: int
    y: int


@dataclass(frozen=True)
class Size:
    w: int
    h: int


@dataclass(frozen=True)
class Rect:
    """Half-open integer rectangle: covers [x, x+w) x [y, y+h)."""

    x: int
    y: int
    w: int
    h: int

    def __post_init__(self) -> None:
        if self.w < 0 or self.h < 0:
            raise ValueError(f"rect dimensions must be non-negative: {self.w}x{self.h}")

    @property
    def x2(self) -> int:
        return self.x + self.w

    @property
    def y2(self) -> int:
        return self.y + self.h

    @property
    def area(self) -> int:
        return self.w * self.h

    @property
    def size(self) -> Size:
        return Size(self.w, self.h)

    def contains_point(self, p: Point) -> bool:
        return self.x <= p.x < self.x2 and self.y <= p.y < self.y2

    def moved_to(self, x: int, y: int) -> "Rect":
        return Rect(x, y, self.w, self.h)

    def resized(self, w: int, h: int) -> "Rect":
        return Rect(self.x, self.y, w, h)


@dataclass(frozen=True)
class DisplayBounds:
    """Available display area; origin is fixed at (0, 0)."""

    w: int
    h: int

    def __post_init__(self) -> None:
        if self.w <= 0 or self.h <= 0:
            raise ValueError(f"display bounds must be positive: {self.w}x{self.h}")


def overlap_area(a: Rect, b: Rect) -> int:
    """Area of the intersection of two rects, 0 when disjoint."""
    ow = min(a.x2, b.x2) - max(a.x, b.x)
    oh = min(a.y2, b.y2) - max(a.y, b.y)
    if ow <= 0 or oh <= 0:
        return 0
    return ow * oh


def clip(a: Rect, b: Rect) -> Rect:
    """Intersection of two rects; zero-sized rect at ``a``'s corner when disjoint."""
    x1 = max(a.x, b.x)
    y1 = max(a.y, b.y)
    x2 = min(a.x2, b.x2)
    y2 = min(a.y2, b.y2)
    if x2 <= x1 or y2 <= y1:
        return Rect(a.x, a.y, 0, 0)
    return Rect(x1, y1, x2 - x1, y2 - y1)


def within_bounds(r: Rect, b: DisplayBounds) -> bool:
    return r.x >= 0 and r.y >= 0 and r.x2 <= b.w and r.y2 <= b.h


def translate_into(r: Rect, b: DisplayBounds) -> Rect:
    """Translate ``r`` so it lies fully inside ``b``, moving it as little as possible.

    Width and height are never changed. Each axis is clamped independently,
    which minimises the L-infinity displacement.
    """
    if r.w > b.w or r.h > b.h:
        raise DoesNotFit(f"{r.w}x{r.h} rect cannot fit in {b.w}x{b.h} bounds")
    x = min(max(r.x, 0), b.w - r.w)
    y = min(max(r.y, 0), b.h - r.h)
    return Rect(x, y, r.w, r.h)
