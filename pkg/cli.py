#!/usr/bin/env python3
"""
Command-line front end for the vector-interval algorithms.

    python cli.py merge --a 1,4,6 --b 2,4,5,8,9
    python cli.py trace --low -1 --high 1 --direction rl
    python cli.py insort-buggy --a 10,3,7,17,11 --machine
    python cli.py selftest

Exit codes: 0 ok, 1 selftest failure, 2 usage/parse error, 3 domain error,
4 out-of-bounds diagnostic.
"""
import argparse
import json
import logging
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, List, Optional, Tuple

import algorithms
from errors import UsageError, VectorParseError, VintvError
from interval_core import LEFT_TO_RIGHT, RIGHT_TO_LEFT, Direction, indices, is_empty, make_interval
from settings import configure_logging, load_settings
from tracing import ALGORITHM_NAMES, render_event, trace_interval, traced_run
from vector_interval import VectorData

logger = logging.getLogger(__name__)

SUBCOMMANDS = ("sum-interval", "avg", "dot", "merge", "insort", "insort-buggy", "trace", "selftest")
VECTOR_ARITY = {"avg": 1, "dot": 2, "merge": 2, "insort": 1, "insort-buggy": 1}


@dataclass
class CliRequest:
    subcommand: str
    vectors: List[VectorData] = field(default_factory=list)
    interval_bounds: Optional[Tuple[int, int]] = None
    output_mode: str = "plain"
    direction: Optional[Direction] = None
    algorithm: Optional[str] = None

    def validate(self):
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        expected = VECTOR_ARITY.get(self.subcommand)
        if expected is not None and len(self.vectors) != expected:
            raise UsageError(f"{self.subcommand} takes exactly {expected} vector(s), got {len(self.vectors)}")
        needs_bounds = self.subcommand == "sum-interval" or (
            self.subcommand == "trace" and self.algorithm in (None, "sum"))
        if needs_bounds and self.interval_bounds is None:
            raise UsageError(f"{self.subcommand} needs --low and --high")


# ======== Parsing ========
def parse_vector_literal(text):
    """Parse '1,4,6' or '[1,4,6]'; '' and '[]' are the empty vector."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1].strip()
    elif body.startswith("[") or body.endswith("]"):
        raise VectorParseError(1, text, "unbalanced brackets")
    if not body:
        return VectorData()
    values = []
    for position, raw in enumerate(body.split(","), start=1):
        token = raw.strip()
        if not token:
            raise VectorParseError(position, token, "empty token")
        try:
            value = float(token)
        except ValueError:
            raise VectorParseError(position, token) from None
        if not math.isfinite(value):
            raise VectorParseError(position, token, "not a finite number")
        values.append(value)
    return VectorData(values)


def read_vector_argument(argument):
    """A literal, or @path: one vector per non-blank line of a UTF-8 file."""
    if not argument.startswith("@"):
        return [parse_vector_literal(argument)]
    path = Path(argument[1:])
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read vector file {path}: {exc}") from None
    except UnicodeDecodeError as exc:
        raise UsageError(f"vector file {path} is not valid UTF-8: {exc.reason} at byte {exc.start}") from None
    return [parse_vector_literal(line) for line in lines if line.strip()]


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="one JSON record per line")

    vectors = argparse.ArgumentParser(add_help=False)
    vectors.add_argument("--a", action="append", default=[], help="vector literal or @file")
    vectors.add_argument("--b", action="append", default=[], help="vector literal or @file")

    bounds = argparse.ArgumentParser(add_help=False)
    bounds.add_argument("--low", type=int)
    bounds.add_argument("--high", type=int)
    bounds.add_argument("--direction", choices=("rl", "lr"))

    parser = argparse.ArgumentParser(prog="vintv", description="Bounds-safe vector interval algorithms")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("sum-interval", parents=[common, bounds], help="sum the integers of [low..high]")
    sub.add_parser("avg", parents=[common, vectors], help="average of a non-empty vector")
    sub.add_parser("dot", parents=[common, vectors], help="dot product of two equal-length vectors")
    sub.add_parser("merge", parents=[common, vectors], help="merge two sorted vectors")
    sub.add_parser("insort", parents=[common, vectors], help="insertion sort")
    sub.add_parser("insort-buggy", parents=[common, vectors], help="the broken insertion sort exhibit")
    trace = sub.add_parser("trace", parents=[common, vectors, bounds], help="trace a decomposition or a run")
    trace.add_argument("--algorithm", choices=ALGORITHM_NAMES)
    sub.add_parser("selftest", parents=[common], help="run the reference check table")
    return parser


def request_from_args(args):
    vectors = []
    for argument in list(getattr(args, "a", [])) + list(getattr(args, "b", [])):
        vectors.extend(read_vector_argument(argument))
    low, high = getattr(args, "low", None), getattr(args, "high", None)
    if (low is None) != (high is None):
        raise UsageError("--low and --high must be given together")
    direction = getattr(args, "direction", None)
    return CliRequest(
        subcommand=args.subcommand,
        vectors=vectors,
        interval_bounds=None if low is None else (low, high),
        output_mode="machine" if args.machine else "plain",
        direction=None if direction is None else Direction.parse(direction),
        algorithm=getattr(args, "algorithm", None),
    )


# ======== Output ========
def format_number(x):
    if isinstance(x, int):
        return str(x)
    if float(x).is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(float(x))


def format_value(value):
    if isinstance(value, VectorData):
        return "[" + ",".join(format_number(x) for x in value.to_list()) + "]"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(format_number(x) for x in value) + "]"
    return format_number(value)


def _json_value(value):
    if isinstance(value, VectorData):
        return value.to_list()
    if isinstance(value, tuple):
        return list(value)
    return value


class Output:
    def __init__(self, mode="plain", out=None, err=None):
        self.machine = mode == "machine"
        self.out = out or sys.stdout
        self.err = err or sys.stderr

    def _record(self, record):
        self.out.write(json.dumps(record) + "\n")

    def event(self, event):
        if self.machine:
            self._record(event.to_record())
        else:
            self.out.write(render_event(event) + "\n")

    def result(self, subcommand, value):
        if self.machine:
            self._record({"record": "result", "subcommand": subcommand, "value": _json_value(value)})
        else:
            self.out.write(format_value(value) + "\n")

    def check(self, name, passed, detail):
        if self.machine:
            self._record({"record": "check", "name": name, "passed": passed, "detail": detail})
        else:
            self.out.write(f"{'PASS' if passed else 'FAIL'} {name}{'' if passed else ': ' + detail}\n")

    def summary(self, passed, failed):
        if self.machine:
            self._record({"record": "summary", "passed": passed, "failed": failed})
        else:
            self.out.write(f"{passed} passed, {failed} failed\n")

    def error(self, exc):
        if self.machine:
            record = {"record": "error", "exit_code": exc.exit_code}
            record.update(exc.to_record())
            self._record(record)
        else:
            self.err.write(f"error: {exc.message}\n")


# ======== Reference checks ========
@dataclass
class SelfCheck:
    name: str
    actual: Callable[[], object]
    expected: object
    tolerance: Optional[float] = None

    def run(self):
        try:
            value = self.actual()
        except VintvError as exc:
            return False, f"raised {exc.message}"
        if self.tolerance is not None:
            passed = abs(value - self.expected) <= self.tolerance
        else:
            passed = value == self.expected
        return passed, f"expected {format_value(self.expected)}, got {format_value(value)}"


def _sorted_copy(values):
    vec = VectorData(values)
    algorithms.insertion_sort_in_place(vec)
    return vec


def reference_checks():
    """The worked examples: emptiness, interval sums, average, dot product, merge, sort."""
    checks = []
    for low, high, expected in ((3, 4, False), (30, 30, False), (5, 4, True)):
        checks.append(SelfCheck(f"is_empty [{low}..{high}]", lambda l=low, h=high: is_empty(make_interval(l, h)), expected))
    for summer in (algorithms.sum_interval_rl, algorithms.sum_interval_lr):
        for low, high, expected in ((10, 1, 0), (10, 10, 10), (-1, 1, 0)):
            checks.append(SelfCheck(f"{summer.__name__} [{low}..{high}]", lambda s=summer, l=low, h=high: s(l, h), expected))
    for values, expected in (((6, 7, 8, 9), 7.5), ((1, 2, 3), 2)):
        checks.append(SelfCheck(f"avg_vector {format_value(values)}",
                                lambda v=values: algorithms.avg_vector(VectorData(v)), expected, 0.01))
    for values, expected in (((), 0), ((1, 2, 3), 14)):
        checks.append(SelfCheck(f"dot_product {format_value(values)}.{format_value(values)}",
                                lambda v=values: algorithms.dot_product(VectorData(v), VectorData(v)), expected, 0.01))
    for a, b, expected in (((), (), ()), ((10,), (2,), (2, 10)), ((1, 4, 6), (2, 4, 5, 8, 9), (1, 2, 4, 4, 5, 6, 8, 9))):
        checks.append(SelfCheck(f"merge_sorted {format_value(a)} {format_value(b)}",
                                lambda a=a, b=b: algorithms.merge_sorted(VectorData(a), VectorData(b)),
                                VectorData(expected)))
    for values, expected in (((10,), (10,)), ((10, 3, 7, 17, 11), (3, 7, 10, 11, 17))):
        checks.append(SelfCheck(f"insertion_sort_in_place {format_value(values)}",
                                lambda v=values: _sorted_copy(v), VectorData(expected)))
    return checks


# ======== Dispatch ========
def _interval_direction(request):
    return request.direction or RIGHT_TO_LEFT


def _run_sum(request, output):
    low, high = request.interval_bounds
    if _interval_direction(request) is LEFT_TO_RIGHT:
        return algorithms.sum_interval_lr(low, high)
    return algorithms.sum_interval_rl(low, high)


def _run_insort(request, output):
    vec = request.vectors[0]
    algorithms.insertion_sort_in_place(vec)
    return vec


def _run_insort_buggy(request, output):
    vec = request.vectors[0]
    algorithms.insertion_sort_buggy(vec)
    return vec


def _run_trace(request, output):
    if request.algorithm is None:
        low, high = request.interval_bounds
        direction = _interval_direction(request)
        for event in trace_interval(low, high, direction):
            output.event(event)
        return list(indices(make_interval(low, high), direction))
    outcome = traced_run(request.algorithm, request.vectors, request.interval_bounds, request.direction)
    for event in outcome.events:
        output.event(event)
    if outcome.error is not None:
        raise outcome.error
    return outcome.result


HANDLERS = {
    "sum-interval": _run_sum,
    "avg": lambda request, output: algorithms.avg_vector(request.vectors[0]),
    "dot": lambda request, output: algorithms.dot_product(*request.vectors),
    "merge": lambda request, output: algorithms.merge_sorted(*request.vectors),
    "insort": _run_insort,
    "insort-buggy": _run_insort_buggy,
    "trace": _run_trace,
}


def _selftest(output):
    passed = failed = 0
    for check in reference_checks():
        ok, detail = check.run()
        output.check(check.name, ok, detail)
        passed, failed = passed + ok, failed + (not ok)
    output.summary(passed, failed)
    return 0 if failed == 0 else 1


def run(request, out=None, err=None):
    """Execute one request; returns the process exit status."""
    output = Output(request.output_mode, out, err)
    try:
        request.validate()
        if request.subcommand == "selftest":
            return _selftest(output)
        value = HANDLERS[request.subcommand](request, output)
    except VintvError as exc:
        logger.warning("%s failed: %s", request.subcommand, exc.message)
        output.error(exc)
        return exc.exit_code
    output.result(request.subcommand, value)
    return 0


def main(argv=None, out=None, err=None):
    args = build_parser().parse_args(argv)
    mode = "machine" if args.machine else "plain"
    try:
        configure_logging(load_settings().log_level)
        request = request_from_args(args)
    except VintvError as exc:
        Output(mode, out, err).error(exc)
        return exc.exit_code
    return run(request, out, err)


if __name__ == "__main__":
    sys.exit(main())
