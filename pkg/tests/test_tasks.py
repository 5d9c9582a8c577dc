# -*- coding: utf-8 -*-

import time

import pytest

from trajstat.tasks import TaskContext, TaskExecutor


def _slow_square(value):
    time.sleep(0.01 * (5 - value % 5))
    return value * value


def test_results_keep_input_order():
    with TaskExecutor(4) as executor:
        assert executor.workers == 4
        assert executor.map(_slow_square, range(10)) == [v * v for v in range(10)]
        assert not executor.is_running()


def test_single_worker_matches_many():
    with TaskExecutor(1) as serial, TaskExecutor(3) as parallel:
        items = list(range(7))
        assert serial.map(_slow_square, items) == parallel.map(_slow_square, items)


def test_first_error_is_raised():
    def fail_on_three(value):
        if value == 3:
            raise ValueError("three")

        return value

    with TaskExecutor(2) as executor:
        with pytest.raises(ValueError, match="three"):
            executor.map(fail_on_three, range(6))


def test_empty_sweep():
    with TaskExecutor() as executor:
        assert executor.map(_slow_square, []) == []


def test_worker_count_is_at_least_one():
    with TaskExecutor(0) as executor:
        assert executor.workers == 1


def test_task_context_defaults():
    context = TaskContext(2, "item")

    assert context.result is None
    assert context.error is None
    assert not context.cancelled
