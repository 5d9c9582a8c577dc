# -*- coding: utf-8 -*-

from .l10n import setup_locale

__all__ = [
    "setup_locale",
]
