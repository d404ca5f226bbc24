"""Reference implementations for differential tests.

Plain loops only: nothing here may use interval_core,
vector_interval folds or algorithms, only the VectorData carrier.
"""
from errors import LengthMismatchError
from vector_interval import VectorData


def naive_sum(low, high):
    total = 0
    i = low
    while i <= high:
        total += i
        i += 1
    return total


def naive_dot(v1, v2):
    xs, ys = v1.to_list(), v2.to_list()
    if len(xs) != len(ys):
        raise LengthMismatchError(len(xs), len(ys))
    total = 0.0
    for k in range(len(xs)):
        total += xs[k] * ys[k]
    return total


def sort_oracle(vec):
    return VectorData(sorted(vec.to_list()))


def merge_oracle(v1, v2):
    # sorted concatenation, no merge step
    return VectorData(sorted(v1.to_list() + v2.to_list()))
