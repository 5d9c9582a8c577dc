# -*- coding: utf-8 -*-

# Trajstat: thermodynamics of quantum trajectories
# Copyright (C) 2025 The Trajstat Authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import logging
import sys

from trajstat import APP_NAME, LOCALES_DIR
from trajstat.application import run
from trajstat.i18n import setup_locale
from trajstat.utils import setup_logging

_logger = logging.getLogger(APP_NAME)


def handle_exception(exc_type, exc_value, exc_traceback):
    _logger.critical(
        "Unhandled exception",
        exc_info=(exc_type, exc_value, exc_traceback),
    )


def main():
    sys.excepthook = handle_exception
    setup_locale(APP_NAME, str(LOCALES_DIR))
    setup_logging()

    try:
        sys.exit(run(sys.argv[1:]))
    except KeyboardInterrupt:
        sys.exit(130)


if __name__ == "__main__":
    main()
