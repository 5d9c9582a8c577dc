# -*- coding: utf-8 -*-

import os
from pathlib import Path

APP_NAME = "trajstat"

BASE_DIR = Path(__file__).resolve().parent
RESOURCES_DIR = BASE_DIR / "resources"
MODELS_DIR = RESOURCES_DIR / "models"
LOCALES_DIR = BASE_DIR / "locales"

CONFIG_HOME = os.environ.get("XDG_CONFIG_HOME") or Path.home() / ".config"
CONFIG_DIR = Path(CONFIG_HOME) / APP_NAME

__version__ = "0.1.0"
