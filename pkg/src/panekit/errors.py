"""Engine error hierarchy.

Every recoverable policy failure is an ``EngineError`` subclass; the replay
harness converts these into ``error`` output records and keeps going.
Anything else escaping the engine is a bug.
"""

from __future__ import annotations


class EngineError(Exception):
    """Base class for all recoverable engine errors."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class DoesNotFit(EngineError):
    """Rect is larger than the bounds it must be placed in."""


class BadLimits(EngineError):
    """Window size limits are inconsistent or below the minimum content size."""


class BadRect(EngineError):
    """Window rect violates its size limits."""


class NoSuchWindow(EngineError):
    """Window id is not live on this desktop."""


class ZeroArea(EngineError):
    """Occlusion fraction is undefined for a zero-area rect."""


class NotExposed(EngineError):
    """Operation requires an exposed window."""


class SameWindow(EngineError):
    """Target and protected window must differ."""


class LockedTarget(EngineError):
    """Locked windows may not be the target of an unobscure plan."""


class StalePlan(EngineError):
    """The target window changed between planning and application."""


class NothingToRestore(EngineError):
    """Window has no saved geometry or hidden state to restore."""


class NoRequiredComponent(EngineError):
    """Window has no required component to derive a minimum size from."""


class DisplayTooSmall(EngineError):
    """New display bounds cannot hold some window at its minimum size."""


class NonMonotonicTime(EngineError):
    """Pointer samples must arrive with non-decreasing timestamps."""


class AlreadyExposed(EngineError):
    """Window is not in an exposable (invisible or icon) state."""


class ClockRegression(EngineError):
    """Logical clock may never run backwards."""


class ParseError(EngineError):
    """Trace record line is malformed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
