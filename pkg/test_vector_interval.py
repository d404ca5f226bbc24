#!/usr/bin/env python3
"""
Tests for vector intervals, checked access and the vector folds.
Run: python -m unittest test_vector_interval
"""
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from errors import DomainError, IntervalConstraintError, IntervalMismatchError, OobDiagnostic
from interval_core import LEFT_TO_RIGHT, Step, is_empty, length, make_interval, split_high, split_low
from vector_interval import (
    VectorData,
    VectorInterval,
    full_interval,
    get,
    make_vinterval,
    set,
    swap,
    vfold,
    vfold_lr,
    vfold_rl,
)


def add_elem(x, i, acc):
    return x + acc


@st.composite
def values_with_two_indices(draw):
    values = draw(st.lists(st.integers(-50, 49), min_size=1, max_size=19))
    index = st.integers(0, len(values) - 1)
    return values, draw(index), draw(index)


@st.composite
def vector_with_interval(draw):
    """Values plus any (low, high) that make a vector interval over them."""
    values = draw(st.lists(st.integers(-100, 99), max_size=29))
    low = draw(st.integers(0, len(values)))
    high = draw(st.integers(low - 1, len(values) - 1))
    return values, low, high


def satisfies_constraints(vec_len, low, high):
    if not (low >= 0 and low <= vec_len and -1 <= high <= vec_len - 1):
        return False
    return all(0 <= i < vec_len for i in range(low, high + 1))


class VectorIntervalConstructionTests(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(make_vinterval(4, 0, 3), VectorInterval(0, 3, 4))
        empty = make_vinterval(4, 0, -1)
        self.assertTrue(is_empty(empty))
        with self.assertRaises(IntervalConstraintError) as ctx:
            make_vinterval(3, 0, 3)
        self.assertEqual(ctx.exception.bound, "high")

    def test_negative_low_names_low(self):
        with self.assertRaises(IntervalConstraintError) as ctx:
            make_vinterval(3, -1, 1)
        self.assertEqual(ctx.exception.bound, "low")
        self.assertEqual(ctx.exception.exit_code, 3)

    def test_constructor_soundness_exhaustive(self):
        for vec_len in range(5):
            for low in range(-3, vec_len + 4):
                for high in range(-3, vec_len + 4):
                    expected = satisfies_constraints(vec_len, low, high)
                    try:
                        make_vinterval(vec_len, low, high)
                        accepted = True
                    except IntervalConstraintError:
                        accepted = False
                    self.assertEqual(accepted, expected, (vec_len, low, high))

    def test_full_interval(self):
        self.assertEqual(full_interval(VectorData([6, 7, 8, 9])), VectorInterval(0, 3, 4))
        self.assertEqual(full_interval(VectorData()), VectorInterval(0, -1, 0))
        self.assertEqual(full_interval(VectorData([1])), VectorInterval(0, 0, 1))

    def test_splits_keep_vector_interval_type(self):
        iv = make_vinterval(4, 0, 3)
        high_step, low_step = split_high(iv), split_low(iv)
        self.assertIsInstance(high_step, Step)
        self.assertEqual(high_step.rest, VectorInterval(0, 2, 4))
        self.assertEqual(low_step.rest, VectorInterval(1, 3, 4))
        self.assertEqual(length(iv), 4)

    def test_left_to_right_terminal_interval_is_valid(self):
        iv = make_vinterval(3, 0, 2)
        while isinstance(split_low(iv), Step):
            iv = split_low(iv).rest
        self.assertEqual(iv, VectorInterval(3, 2, 3))


class VectorDataTests(unittest.TestCase):
    def test_get(self):
        self.assertEqual(get(VectorData([6, 7, 8, 9]), 3), 9)
        with self.assertRaises(OobDiagnostic) as ctx:
            get(VectorData([6, 7, 8, 9]), 4)
        self.assertEqual((ctx.exception.attempted_index, ctx.exception.vector_length,
                          ctx.exception.operation_name), (4, 4, "get"))
        with self.assertRaises(OobDiagnostic) as ctx:
            get(VectorData([10]), -1)
        self.assertEqual(ctx.exception.attempted_index, -1)
        self.assertIsInstance(ctx.exception, IndexError)

    def test_set(self):
        vec = VectorData([0, 0])
        set(vec, 1, 5)
        self.assertEqual(vec.to_list(), [0, 5])
        with self.assertRaises(OobDiagnostic) as ctx:
            set(vec, 2, 5)
        self.assertEqual((ctx.exception.attempted_index, ctx.exception.operation_name), (2, "set"))
        with self.assertRaises(OobDiagnostic) as ctx:
            set(VectorData(), 0, 1)
        self.assertEqual(ctx.exception.vector_length, 0)

    def test_swap(self):
        vec = VectorData([10, 3])
        swap(vec, 0, 1)
        self.assertEqual(vec.to_list(), [3, 10])
        single = VectorData([10])
        swap(single, 0, 0)
        self.assertEqual(single.to_list(), [10])
        with self.assertRaises(OobDiagnostic) as ctx:
            swap(single, 0, 1)
        self.assertEqual((ctx.exception.attempted_index, ctx.exception.vector_length,
                          ctx.exception.operation_name), (1, 1, "swap"))
        self.assertEqual(single.to_list(), [10])

    def test_rejects_non_numbers_and_nan(self):
        with self.assertRaises(DomainError):
            VectorData([1, "2"])
        with self.assertRaises(DomainError):
            VectorData([float("nan")])

    @settings(max_examples=500, deadline=None)
    @given(values_with_two_indices())
    def test_get_set_round_trip_and_swap_involution(self, case):
        original, i, j = case
        vec = VectorData(original)
        vec.set(i, 99)
        self.assertEqual(vec.get(i), 99)
        self.assertEqual([x for k, x in enumerate(vec.to_list()) if k != i],
                         [x for k, x in enumerate(original) if k != i])
        vec = VectorData(original)
        vec.swap(i, j)
        vec.swap(i, j)
        self.assertEqual(vec, VectorData(original))
        self.assertEqual(len(vec), len(original))


class VectorFoldTests(unittest.TestCase):
    def test_vfold_examples(self):
        self.assertEqual(vfold_rl(VectorData([6, 7, 8, 9]), make_vinterval(4, 0, 3), 0, add_elem), 30)
        self.assertEqual(vfold_rl(VectorData([1, 2, 3]), make_vinterval(3, 0, -1), 0, add_elem), 0)
        self.assertEqual(vfold_rl(VectorData([10]), full_interval(VectorData([10])), 0, add_elem), 10)
        self.assertEqual(vfold_lr(VectorData([1, 2, 3]), make_vinterval(3, 0, 2), 0, add_elem), 6)
        self.assertEqual(vfold_lr(VectorData(), make_vinterval(0, 0, -1), 0, add_elem), 0)
        self.assertEqual(vfold_lr(VectorData([2]), make_vinterval(1, 0, 0), 0, add_elem), 2)

    def test_mismatched_interval_is_rejected(self):
        with self.assertRaises(IntervalMismatchError):
            vfold_rl(VectorData([1, 2]), make_vinterval(3, 0, 2), 0, add_elem)
        with self.assertRaises(TypeError):
            vfold_lr(VectorData([1, 2]), make_interval(0, 1), 0, add_elem)

    @settings(max_examples=10_000, deadline=None)
    @given(vector_with_interval(), st.sampled_from([vfold_rl, vfold_lr]))
    def test_index_safety(self, case, folder):
        values, low, high = case
        n = len(values)
        iv = make_vinterval(n, low, high)
        seen = []

        def checked(x, i, acc):
            seen.append(i)
            return acc + 1

        visits = folder(VectorData(values), iv, 0, checked)
        self.assertEqual(visits, length(iv))
        self.assertTrue(all(0 <= i < n and low <= i <= high for i in seen), seen)

    def test_full_interval_visits_each_element_once(self):
        vec = VectorData([4, 8, 15, 16, 23, 42])
        seen = vfold(vec, full_interval(vec), [], lambda x, i, acc: acc + [i], LEFT_TO_RIGHT)
        self.assertEqual(sorted(seen), list(range(6)))


if __name__ == "__main__":
    unittest.main()
