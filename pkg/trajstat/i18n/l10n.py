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

import os, sys, locale


def setup_locale(text_domain: str, locale_path: str) -> None:
    """Set up message translation for the command line tool.

    Numeric formatting is left in the "C" locale so that every report
    is written with a dot as decimal separator regardless of the user
    environment.
    """

    os.environ.setdefault("LANG", "en_US.UTF-8")
    category = getattr(locale, "LC_MESSAGES", locale.LC_ALL)

    try:
        locale.setlocale(category, "")
    except locale.Error:
        locale.setlocale(category, "C")

    if not os.path.isdir(locale_path):
        locale_path = f"{ sys.base_prefix }/share/locale"

    locale.bindtextdomain(text_domain, locale_path)
    locale.textdomain(text_domain)
