"""Integer intervals and the two ways of taking them apart.

An interval [low..high] is empty when low > high. A non-empty interval can be
peeled from the right, [[low..high-1]..high], or from the left,
[low..[low+1..high]]. The folds below are the templates for processing an
interval structurally: the recursion always consumes exactly the rest
produced by one peel, so a fold makes length(iv) combine calls.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Callable, Iterator, Optional, Protocol, Tuple, TypeVar, Union

A = TypeVar("A")


class Direction(enum.Enum):
    RIGHT_TO_LEFT = "rl"
    LEFT_TO_RIGHT = "lr"
    NONE = "none"

    @classmethod
    def parse(cls, text):
        lowered = str(text).strip().lower()
        for direction in cls:
            if lowered in (direction.value, direction.name.lower()):
                return direction
        raise ValueError(f"unknown direction {text!r} (expected 'rl' or 'lr')")


RIGHT_TO_LEFT = Direction.RIGHT_TO_LEFT
LEFT_TO_RIGHT = Direction.LEFT_TO_RIGHT


class Observer(Protocol):
    """Receives one call per decomposition step, element visit or access."""

    def record(self, kind: str, direction: Direction, before: Tuple[int, int],
               index: Optional[int] = None, detail: str = "") -> None: ...


@dataclass(frozen=True)
class Interval:
    low: int
    high: int

    @property
    def bounds(self) -> Tuple[int, int]:
        return (self.low, self.high)

    def __str__(self):
        return f"[{self.low}..{self.high}]"


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Step:
    index: int
    rest: Interval


Decomposition = Union[Empty, Step]
EMPTY = Empty()


def make_interval(low: int, high: int) -> Interval:
    return Interval(int(low), int(high))


def is_empty(iv: Interval) -> bool:
    return iv.low > iv.high


def length(iv: Interval) -> int:
    return max(0, iv.high - iv.low + 1)


def contains(iv: Interval, i: int) -> bool:
    return iv.low <= i <= iv.high


def split_high(iv: Interval) -> Decomposition:
    """[low..high] = [[low..high-1]..high]"""
    if is_empty(iv):
        return EMPTY
    return Step(iv.high, replace(iv, high=iv.high - 1))


def split_low(iv: Interval) -> Decomposition:
    """[low..high] = [low..[low+1..high]]"""
    if is_empty(iv):
        return EMPTY
    return Step(iv.low, replace(iv, low=iv.low + 1))


def split(iv: Interval, direction: Direction) -> Decomposition:
    if direction is RIGHT_TO_LEFT:
        return split_high(iv)
    if direction is LEFT_TO_RIGHT:
        return split_low(iv)
    raise ValueError(f"cannot split in direction {direction}")


def indices(iv: Interval, direction: Direction) -> Iterator[int]:
    """Indices of iv in the order a fold in `direction` peels them."""
    if direction is RIGHT_TO_LEFT:
        return iter(range(iv.high, iv.low - 1, -1))
    if direction is LEFT_TO_RIGHT:
        return iter(range(iv.low, iv.high + 1))
    raise ValueError(f"no index order for direction {direction}")


def report_peels(iv: Interval, direction: Direction, observer: Observer,
                 kind: str = "visit", detail: str = "") -> None:
    """Walk the decomposition chain of iv, reporting each peel and the final stop."""
    current = iv
    while True:
        match split(current, direction):
            case Step(index=index, rest=rest):
                observer.record(kind, direction, current.bounds, index, detail)
                current = rest
            case Empty():
                observer.record("stop", direction, current.bounds, None, detail)
                return


def fold_rl(iv: Interval, base: A, combine: Callable[[int, A], A],
            observer: Optional[Observer] = None) -> A:
    """f(iv) = base if empty, else combine(high, f([low..high-1])).

    Unwound into a loop: the innermost call (index low) combines first.
    """
    if observer is not None:
        report_peels(iv, RIGHT_TO_LEFT, observer)
    acc = base
    for index in range(iv.low, iv.high + 1):
        acc = combine(index, acc)
    return acc


def fold_lr(iv: Interval, base: A, combine: Callable[[int, A], A],
            observer: Optional[Observer] = None) -> A:
    """f(iv) = base if empty, else combine(low, f([low+1..high]))."""
    if observer is not None:
        report_peels(iv, LEFT_TO_RIGHT, observer)
    acc = base
    for index in range(iv.high, iv.low - 1, -1):
        acc = combine(index, acc)
    return acc


def fold(iv: Interval, base: A, combine: Callable[[int, A], A],
         direction: Direction = RIGHT_TO_LEFT, observer: Optional[Observer] = None) -> A:
    if direction is RIGHT_TO_LEFT:
        return fold_rl(iv, base, combine, observer)
    if direction is LEFT_TO_RIGHT:
        return fold_lr(iv, base, combine, observer)
    raise ValueError(f"cannot fold in direction {direction}")
