# -*- coding: utf-8 -*-

from .task_context import TaskContext
from .task_executor import TaskExecutor

__all__ = [
    "TaskContext",
    "TaskExecutor"
]
