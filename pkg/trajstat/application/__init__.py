# -*- coding: utf-8 -*-

from .application import Application, attach_negative_values, run
from .report_writer import ReportWriter, flatten_row, format_cell, to_builtin
from .run_config import RunConfig, resolve_model_path

__all__ = [
    "Application",
    "ReportWriter",
    "RunConfig",
    "attach_negative_values",
    "flatten_row",
    "format_cell",
    "resolve_model_path",
    "run",
    "to_builtin",
]
