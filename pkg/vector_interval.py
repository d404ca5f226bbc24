"""Vectors, intervals of valid indices into them, and folds over those intervals.

For a vector of length N a vector interval is [low..high] with low >= 0 and
-1 <= high <= N-1. Every index of a non-empty vector interval is a valid
index, so the folds here read elements without checking them. Direct access
through get/set/swap is checked and fails with an OobDiagnostic.
"""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, TypeVar

from errors import DomainError, IntervalConstraintError, IntervalMismatchError, OobDiagnostic
from interval_core import (
    LEFT_TO_RIGHT,
    RIGHT_TO_LEFT,
    Direction,
    Interval,
    Observer,
    report_peels,
)

A = TypeVar("A")


def _as_number(value):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise DomainError(f"vector elements must be numbers, got {value!r}")
    number = float(value)
    if math.isnan(number):
        raise DomainError("NaN is not a valid vector element")
    return number


class VectorData:
    """Fixed-length mutable sequence of numbers."""

    def __init__(self, values: Iterable = ()):
        self._items = [_as_number(v) for v in values]

    @classmethod
    def filled(cls, n, value=math.nan):
        """A length-n vector holding `value` everywhere (NaN marks 'not yet written')."""
        vec = cls.__new__(cls)
        vec._items = [float(value)] * n
        return vec

    def __len__(self):
        return len(self._items)

    def __eq__(self, other):
        if not isinstance(other, VectorData):
            return NotImplemented
        return self._items == other._items

    def __repr__(self):
        return f"VectorData({self._items!r})"

    def copy(self):
        return VectorData(self._items)

    def to_list(self):
        return list(self._items)

    def at(self, i: int) -> float:
        # Unchecked; callers hold a validated vector interval containing i.
        return self._items[i]

    def get(self, i: int) -> float:
        if not 0 <= i < len(self._items):
            raise OobDiagnostic(i, len(self._items), "get")
        return self._items[i]

    def set(self, i: int, x) -> None:
        if not 0 <= i < len(self._items):
            raise OobDiagnostic(i, len(self._items), "set")
        self._items[i] = _as_number(x)

    def swap(self, i: int, j: int) -> None:
        items = self._items
        n = len(items)
        if not 0 <= i < n:
            raise OobDiagnostic(i, n, "swap")
        if not 0 <= j < n:
            raise OobDiagnostic(j, n, "swap")
        items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class VectorInterval(Interval):
    vec_len: int

    def __post_init__(self):
        low, high, n = self.low, self.high, self.vec_len
        if n < 0:
            raise IntervalConstraintError("vec_len", n, low, high, "must be >= 0")
        if low < 0:
            raise IntervalConstraintError("low", n, low, high, "must be >= 0")
        if low > n:
            raise IntervalConstraintError("low", n, low, high, f"must be <= {n}")
        if high < -1:
            raise IntervalConstraintError("high", n, low, high, "must be >= -1")
        if high > n - 1:
            raise IntervalConstraintError("high", n, low, high, f"must be <= {n - 1}")


def make_vinterval(vec_len: int, low: int, high: int) -> VectorInterval:
    return VectorInterval(int(low), int(high), int(vec_len))


def full_interval(vec: VectorData) -> VectorInterval:
    return VectorInterval(0, len(vec) - 1, len(vec))


def get(vec: VectorData, i: int) -> float:
    return vec.get(i)


def set(vec: VectorData, i: int, x) -> None:  # noqa: A001 - mirrors the vector mutator name
    vec.set(i, x)


def swap(vec: VectorData, i: int, j: int) -> None:
    vec.swap(i, j)


def check_pairing(vec: VectorData, iv: VectorInterval) -> None:
    if not isinstance(iv, VectorInterval):
        raise TypeError(f"expected a VectorInterval, got {type(iv).__name__}")
    if iv.vec_len != len(vec):
        raise IntervalMismatchError(iv.vec_len, len(vec))


def vfold_rl(vec: VectorData, iv: VectorInterval, base: A,
             combine: Callable[[float, int, A], A], observer: Optional[Observer] = None) -> A:
    """base if iv is empty, else combine(V[high], high, vfold_rl over [low..high-1])."""
    check_pairing(vec, iv)
    if observer is not None:
        report_peels(iv, RIGHT_TO_LEFT, observer)
    at = vec.at
    acc = base
    for index in range(iv.low, iv.high + 1):
        acc = combine(at(index), index, acc)
    return acc


def vfold_lr(vec: VectorData, iv: VectorInterval, base: A,
             combine: Callable[[float, int, A], A], observer: Optional[Observer] = None) -> A:
    """base if iv is empty, else combine(V[low], low, vfold_lr over [low+1..high])."""
    check_pairing(vec, iv)
    if observer is not None:
        report_peels(iv, LEFT_TO_RIGHT, observer)
    at = vec.at
    acc = base
    for index in range(iv.high, iv.low - 1, -1):
        acc = combine(at(index), index, acc)
    return acc


def vfold(vec: VectorData, iv: VectorInterval, base: A, combine: Callable[[float, int, A], A],
          direction: Direction = RIGHT_TO_LEFT, observer: Optional[Observer] = None) -> A:
    if direction is RIGHT_TO_LEFT:
        return vfold_rl(vec, iv, base, combine, observer)
    if direction is LEFT_TO_RIGHT:
        return vfold_lr(vec, iv, base, combine, observer)
    raise ValueError(f"cannot fold in direction {direction}")
