# -*- coding: utf-8 -*-

from .config_manager import ConfigManager
from .expression_parser import ExpressionParser
from .log_formatter import JsonLineFormatter, setup_logging
from .tolerance_cache import tolerance_cache

__all__ = [
    "ConfigManager",
    "ExpressionParser",
    "JsonLineFormatter",
    "setup_logging",
    "tolerance_cache",
]
