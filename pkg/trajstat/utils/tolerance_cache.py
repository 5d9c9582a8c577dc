# -*- coding: utf-8 -*-

from functools import lru_cache, wraps
from typing import Callable

from .config_manager import ConfigManager


def tolerance_cache(*keys: str, maxsize: int = 32) -> Callable:
    """Memoize a function on its arguments and on the tolerances it reads.

    The values of the named tolerances at call time are part of the
    cache key, so an override made with :meth:`ConfigManager.override`
    yields a fresh entry.

    Args:
        keys: Names of the tolerances the function depends on.
        maxsize: Size of the underlying LRU cache.
    """

    def decorator(function: Callable) -> Callable:
        @lru_cache(maxsize=maxsize)
        def cached(tolerances: tuple, *args, **kwargs):
            return function(*args, **kwargs)

        @wraps(function)
        def wrapper(*args, **kwargs):
            config = ConfigManager()
            tolerances = tuple(config.get_tolerance(key) for key in keys)
            return cached(tolerances, *args, **kwargs)

        wrapper.cache_clear = cached.cache_clear
        wrapper.cache_info = cached.cache_info

        return wrapper

    return decorator
