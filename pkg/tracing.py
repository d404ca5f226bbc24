"""Step-by-step traces of interval decompositions and algorithm runs.

Library functions take an optional observer; a TraceCollector is that
observer. Element reads and writes are captured by running the algorithm on
TracedVector copies of its inputs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import algorithms
from errors import TraceLimitError, UnknownAlgorithmError, UsageError, VintvError
from interval_core import (
    LEFT_TO_RIGHT,
    RIGHT_TO_LEFT,
    Direction,
    Interval,
    length,
    make_interval,
    report_peels,
)
from vector_interval import VectorData

EVENT_KINDS = ("decompose", "visit", "access", "mutate", "stop")
ALGORITHM_NAMES = ("sum", "avg", "dot", "merge", "insort", "insort_buggy")


@dataclass(frozen=True)
class TraceEvent:
    step: int
    kind: str
    direction: Direction
    interval_before: Tuple[int, int]
    index: Optional[int] = None
    detail: str = ""

    def to_record(self):
        return {
            "record": "event",
            "step": self.step,
            "kind": self.kind,
            "direction": self.direction.value,
            "low": self.interval_before[0],
            "high": self.interval_before[1],
            "index": self.index,
            "detail": self.detail,
        }


class TraceCollector:
    """Observer that numbers events from 0 in arrival order.

    With a limit, the event past it raises TraceLimitError, which aborts the
    traced computation.
    """

    def __init__(self, limit: Optional[int] = None):
        self.events: List[TraceEvent] = []
        self.limit = limit

    def record(self, kind, direction, before, index=None, detail=""):
        if kind not in EVENT_KINDS:
            raise ValueError(f"unknown trace event kind {kind!r}")
        if self.limit is not None and len(self.events) >= self.limit:
            raise TraceLimitError(self.limit)
        self.events.append(TraceEvent(len(self.events), kind, direction, tuple(before), index, detail))


class TracedVector(VectorData):
    """VectorData that reports every element read and write to a collector.

    Events are recorded before the bounds check, so a failing access is the
    last event of the trace.
    """

    def __init__(self, source: VectorData, collector: TraceCollector):
        self._items = source.to_list()
        self.collector = collector

    def _record(self, kind, index, detail):
        self.collector.record(kind, Direction.NONE, (0, len(self) - 1), index, detail)

    def at(self, i):
        self._record("access", i, "at")
        return super().at(i)

    def get(self, i):
        self._record("access", i, "get")
        return super().get(i)

    def set(self, i, x):
        self._record("mutate", i, "set")
        super().set(i, x)

    def swap(self, i, j):
        self._record("mutate", i, f"swap {i} {j}")
        super().swap(i, j)


@dataclass
class TraceOutcome:
    result: object = None
    error: Optional[VintvError] = None
    events: List[TraceEvent] = field(default_factory=list)

    @property
    def ok(self):
        return self.error is None


def _direction(direction, default):
    if direction is None:
        return default
    if isinstance(direction, Direction):
        return direction
    return Direction.parse(direction)


def trace_interval(low: int, high: int, direction=RIGHT_TO_LEFT,
                   limit: Optional[int] = None) -> List[TraceEvent]:
    """The decomposition chain of [low..high]: one decompose per peel, then a stop.

    A chain longer than `limit` events is refused before any is built.
    """
    iv = make_interval(low, high)
    if limit is not None and length(iv) + 1 > limit:
        raise TraceLimitError(limit, length(iv) + 1)
    collector = TraceCollector(limit)
    report_peels(iv, _direction(direction, RIGHT_TO_LEFT), collector, kind="decompose")
    return collector.events


def _expect_vectors(name, vectors, count):
    if len(vectors) != count:
        raise UsageError(f"{name} takes exactly {count} vector(s), got {len(vectors)}")


def traced_run(algorithm_name: str, vectors: Sequence[VectorData] = (),
               interval: Optional[Interval | Tuple[int, int]] = None, direction=None,
               limit: Optional[int] = None) -> TraceOutcome:
    """Run an algorithm on traced copies of its inputs.

    Errors raised by the algorithm end up in the outcome together with the
    events recorded up to the failure; usage errors are raised. A `limit`
    caps the recorded events; reaching it stops the run with a
    TraceLimitError outcome.
    """
    if algorithm_name not in ALGORITHM_NAMES:
        raise UnknownAlgorithmError(algorithm_name, ALGORITHM_NAMES)
    collector = TraceCollector(limit)

    def traced(vec):
        return TracedVector(vec, collector)

    if algorithm_name == "sum":
        if interval is None:
            raise UsageError("sum needs an interval (low, high)")
        low, high = interval.bounds if isinstance(interval, Interval) else interval
        summer = (algorithms.sum_interval_lr if _direction(direction, RIGHT_TO_LEFT) is LEFT_TO_RIGHT
                  else algorithms.sum_interval_rl)

        def run():
            return summer(low, high, collector)
    elif algorithm_name == "avg":
        _expect_vectors(algorithm_name, vectors, 1)
        vec = traced(vectors[0])

        def run():
            return algorithms.avg_vector(vec, _direction(direction, RIGHT_TO_LEFT), collector)
    elif algorithm_name == "dot":
        _expect_vectors(algorithm_name, vectors, 2)
        v1, v2 = traced(vectors[0]), traced(vectors[1])

        def run():
            return algorithms.dot_product(v1, v2, _direction(direction, LEFT_TO_RIGHT), collector)
    elif algorithm_name == "merge":
        _expect_vectors(algorithm_name, vectors, 2)
        v1, v2 = traced(vectors[0]), traced(vectors[1])

        def run():
            res = algorithms.merge_sorted(
                v1, v2, _direction(direction, LEFT_TO_RIGHT), collector,
                allocate=lambda n: TracedVector(VectorData.filled(n), collector),
            )
            return VectorData(res.to_list())
    else:
        _expect_vectors(algorithm_name, vectors, 1)
        vec = traced(vectors[0])

        def run():
            if algorithm_name == "insort":
                algorithms.insertion_sort_in_place(vec, _direction(direction, LEFT_TO_RIGHT), collector)
            else:
                algorithms.insertion_sort_buggy(vec, collector)
            return VectorData(vec.to_list())

    try:
        return TraceOutcome(run(), None, collector.events)
    except VintvError as exc:
        return TraceOutcome(None, exc, collector.events)


def render_event(event: TraceEvent) -> str:
    """One line per event; peels use bracket notation."""
    low, high = event.interval_before
    suffix = f"  ({event.detail})" if event.detail else ""
    if event.kind in ("decompose", "visit"):
        if event.direction is LEFT_TO_RIGHT:
            return f"[{low}..{high}] = [{low}..[{low + 1}..{high}]]{suffix}"
        return f"[{low}..{high}] = [[{low}..{high - 1}]..{high}]{suffix}"
    if event.kind == "stop":
        return f"[{low}..{high}] = empty{suffix}"
    return f"{event.kind} {event.detail}[{event.index}]"
