"""Interval sums, vector average, dot product, merge and insertion sort.

Every algorithm here processes intervals structurally: it starts from an
interval of valid indices and only ever recurs on the rest of a peel. The
one exception is insertion_sort_buggy, kept as an exhibit of what happens
when insert_step is handed the wrong interval.
"""
from __future__ import annotations

import logging
import math
from typing import Callable, Optional

from errors import EmptyVectorError, LengthMismatchError
from interval_core import (
    LEFT_TO_RIGHT,
    RIGHT_TO_LEFT,
    Direction,
    Empty,
    Observer,
    Step,
    fold_lr,
    fold_rl,
    make_interval,
    report_peels,
    split,
)
from vector_interval import VectorData, full_interval, make_vinterval, vfold

logger = logging.getLogger(__name__)

SAFE_ALGORITHMS = ("sum", "avg", "dot", "merge", "insort")


def _add(index, acc):
    return index + acc


def sum_interval_rl(low: int, high: int, observer: Optional[Observer] = None) -> int:
    return fold_rl(make_interval(low, high), 0, _add, observer)


def sum_interval_lr(low: int, high: int, observer: Optional[Observer] = None) -> int:
    return fold_lr(make_interval(low, high), 0, _add, observer)


def avg_vector(vec: VectorData, direction: Direction = RIGHT_TO_LEFT,
               observer: Optional[Observer] = None) -> float:
    """Average of a non-empty vector."""
    if len(vec) == 0:
        raise EmptyVectorError("avg_vector")
    total = vfold(vec, full_interval(vec), 0.0, lambda x, i, acc: x + acc, direction, observer)
    return total / len(vec)


def dot_product(v1: VectorData, v2: VectorData, direction: Direction = LEFT_TO_RIGHT,
                observer: Optional[Observer] = None) -> float:
    """Sum of v1[i] * v2[i], both vectors processed in step over v1's full interval."""
    if len(v1) != len(v2):
        raise LengthMismatchError(len(v1), len(v2))

    def sum_products(x, i, acc):
        return x * v2.at(i) + acc

    return vfold(v1, full_interval(v1), 0.0, sum_products, direction, observer)


def merge_sorted(v1: VectorData, v2: VectorData, direction: Direction = LEFT_TO_RIGHT,
                 observer: Optional[Observer] = None,
                 allocate: Callable[[int], VectorData] = VectorData.filled) -> VectorData:
    """Merge two non-decreasing vectors into a new non-decreasing vector.

    Three vector intervals (v1, v2, res) are consumed out of step. Left to
    right, the smaller low element is copied and ties take v2's element; right
    to left, the larger high element is copied and ties take v1's, which
    yields the same arrangement.
    """
    logger.debug("merge_sorted: %d + %d elements (%s)", len(v1), len(v2), direction.value)
    res = allocate(len(v1) + len(v2))
    iv1, iv2, ivr = full_interval(v1), full_interval(v2), full_interval(res)

    def place(source, source_iv, index, source_name):
        nonlocal ivr
        target = split(ivr, direction)
        if not isinstance(target, Step):
            raise RuntimeError("merge result interval exhausted before its inputs")
        if observer is not None:
            observer.record("decompose", direction, source_iv.bounds, index, source_name)
            observer.record("decompose", direction, ivr.bounds, target.index, "res")
        res.set(target.index, source.get(index))
        ivr = target.rest

    while True:
        match split(iv1, direction), split(iv2, direction):
            case Empty(), Empty():
                break
            case Empty(), Step(index=j, rest=rest2):
                place(v2, iv2, j, "v2")
                iv2 = rest2
            case Step(index=i, rest=rest1), Empty():
                place(v1, iv1, i, "v1")
                iv1 = rest1
            case Step(index=i, rest=rest1), Step(index=j, rest=rest2):
                a, b = v1.get(i), v2.get(j)
                take_v1 = a < b if direction is LEFT_TO_RIGHT else not b > a
                if take_v1:
                    place(v1, iv1, i, "v1")
                    iv1 = rest1
                else:
                    place(v2, iv2, j, "v2")
                    iv2 = rest2

    if observer is not None:
        observer.record("stop", direction, ivr.bounds, None, "res")
    if any(math.isnan(x) for x in res.to_list()):
        raise RuntimeError("merge left unwritten slots in its result")
    return res


def insert_step(vec: VectorData, low: int, high: int, observer: Optional[Observer] = None) -> None:
    """For the vector interval [low..high], sink V[low] into V[low+1..high+1].

    Adjacent swaps stop at the first pair already in order. Assumes high+1 is
    a valid index; when it is not, get reports the bad index.
    """
    iv = make_vinterval(len(vec), low, high)
    low, high = iv.low, iv.high
    if low > high:
        if observer is not None:
            observer.record("stop", LEFT_TO_RIGHT, (low, high), None, "insert")
        return
    moving = vec.get(low)
    while low <= high:
        if observer is not None:
            observer.record("decompose", LEFT_TO_RIGHT, (low, high), low, "insert")
        if moving <= vec.get(low + 1):
            break
        vec.swap(low, low + 1)
        low += 1  # rest of the peel: [low+1..high]
    else:
        if observer is not None:
            observer.record("stop", LEFT_TO_RIGHT, (low, high), None, "insert")


def insert_step_rl(vec: VectorData, low: int, high: int, observer: Optional[Observer] = None) -> None:
    """For the vector interval [low..high], sink V[high] into V[low-1..high-1].

    Mirror of insert_step; assumes low-1 is a valid index.
    """
    iv = make_vinterval(len(vec), low, high)
    low, high = iv.low, iv.high
    if low > high:
        if observer is not None:
            observer.record("stop", RIGHT_TO_LEFT, (low, high), None, "insert")
        return
    moving = vec.get(high)
    while low <= high:
        if observer is not None:
            observer.record("decompose", RIGHT_TO_LEFT, (low, high), high, "insert")
        if vec.get(high - 1) <= moving:
            break
        vec.swap(high - 1, high)
        high -= 1
    else:
        if observer is not None:
            observer.record("stop", RIGHT_TO_LEFT, (low, high), None, "insert")


def insertion_sort_in_place(vec: VectorData, direction: Direction = LEFT_TO_RIGHT,
                            observer: Optional[Observer] = None) -> None:
    """Sort vec in non-decreasing order by adjacent swaps.

    Left to right: sort [low+1..high], then insert V[low] using [low..high-1].
    Right to left: sort [low..high-1], then insert V[high] using [low+1..high].
    The recursion is unwound, innermost sort first.
    """
    iv = full_interval(vec)
    logger.debug("insertion_sort_in_place: %d elements (%s)", len(vec), direction.value)
    if observer is not None:
        report_peels(iv, direction, observer, kind="decompose", detail="sort")
    if direction is LEFT_TO_RIGHT:
        for low in range(iv.high, iv.low - 1, -1):
            insert_step(vec, low, iv.high - 1, observer)
    elif direction is RIGHT_TO_LEFT:
        for high in range(iv.low, iv.high + 1):
            insert_step_rl(vec, iv.low + 1, high, observer)
    else:
        raise ValueError(f"cannot sort in direction {direction}")


def insertion_sort_buggy(vec: VectorData, observer: Optional[Observer] = None) -> None:
    """Exhibit: insertion sort that hands insert_step [low..high] instead of [low..high-1].

    The first insert reads V[N] and fails with an OobDiagnostic. Not part of
    SAFE_ALGORITHMS.
    """
    iv = full_interval(vec)
    if len(vec) < 2:
        return
    if observer is not None:
        report_peels(iv, LEFT_TO_RIGHT, observer, kind="decompose", detail="sort")
    for low in range(iv.high, iv.low - 1, -1):
        insert_step(vec, low, iv.high, observer)
