"""Exact segment intersection for gesture geometry.

Sample coordinates are integers, so intersections are rational; they are
computed with :class:`~fractions.Fraction` and compared exactly. Integer
sign checks reject non-crossing pairs before any rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .geom import Point


def _in_unit_range(num: int, den: int) -> bool:
    # Is num/den in [0, 1] without division?
    if den > 0:
        return 0 <= num <= den
    return den <= num <= 0


def segment_intersection(
    a1: Point, a2: Point, b1: Point, b2: Point
) -> tuple[Fraction, Fraction] | None:
    """Intersection point of closed segments a1-a2 and b1-b2, if unique.

    Parallel and collinear pairs yield no point; endpoint touches count.
    """
    d1x, d1y = a2.x - a1.x, a2.y - a1.y
    d2x, d2y = b2.x - b1.x, b2.y - b1.y
    den = d1x * d2y - d1y * d2x
    if den == 0:
        return None
    qx, qy = b1.x - a1.x, b1.y - a1.y
    t_num = qx * d2y - qy * d2x
    s_num = qx * d1y - qy * d1x
    if not (_in_unit_range(t_num, den) and _in_unit_range(s_num, den)):
        return None
    t = Fraction(t_num, den)
    return (a1.x + t * d1x, a1.y + t * d1y)
