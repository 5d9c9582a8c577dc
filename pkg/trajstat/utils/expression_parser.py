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

import re
from locale import gettext as _
from functools import lru_cache
from numbers import Number
from typing import List

import numpy as np
from asteval import Interpreter

# Removes operation symbols from the end
CLEAN_REGEX = re.compile(r'[\+\-\*/%&|^]+[\s]*$')


class ExpressionParser:
    """Evaluates numeric command line arguments.

    Values such as ``pi/3``, ``2*0.15`` or ``-0.5:0.5:21`` are accepted
    wherever the command line expects a real number, a list or a grid.
    """

    def __init__(self):
        self._asteval = Interpreter(minimal=True)
        self._evaluate = lru_cache()(self._evaluate_expression)

    def _evaluate_expression(self, text: str) -> float:
        """Evaluate a single expression into a real number."""

        result = self._asteval.eval(text, show_errors=False)

        if len(self._asteval.error) > 0:
            message = self._asteval.error_msg
            self._asteval.error = []
            raise SyntaxError(
                _("Could not evaluate expression: %s") % text
                if not message else message
            )

        if callable(result):
            raise ValueError(_("Expression returned a callback."))

        if result is None or not isinstance(result, Number):
            raise ValueError(_("Expression is not a number: %s") % text)

        if isinstance(result, complex):
            raise ValueError(_("Expression is not real: %s") % text)

        return float(result)

    def scalar(self, text: str | float) -> float:
        """Evaluate a real number."""

        if isinstance(text, Number):
            return float(text)

        text = CLEAN_REGEX.sub('', str(text)).strip()
        return self._evaluate(text)

    def integer(self, text: str | int) -> int:
        """Evaluate an integral number."""

        value = self.scalar(text)

        if not float(value).is_integer():
            raise ValueError(_("Expected an integer: %s") % text)

        return int(value)

    def vector(self, text: str | None) -> np.ndarray:
        """Evaluate a comma separated list of reals."""

        if text is None or not str(text).strip():
            return np.zeros(0)

        values = [self.scalar(v) for v in str(text).split(",") if v.strip()]
        return np.asarray(values, dtype=float)

    def integers(self, text: str) -> List[int]:
        """Evaluate a comma separated list of integers."""

        return [self.integer(v) for v in str(text).split(",") if v.strip()]

    def grid(self, text: str) -> np.ndarray:
        """Evaluate a ``start:stop:n`` grid, or a plain list."""

        parts = str(text).split(":")

        if len(parts) == 1:
            return self.vector(text)

        if len(parts) != 3:
            raise ValueError(_("Expected a start:stop:n grid: %s") % text)

        start, stop = self.scalar(parts[0]), self.scalar(parts[1])
        count = self.integer(parts[2])

        if count < 1:
            raise ValueError(_("Grid needs at least one point: %s") % text)

        return np.linspace(start, stop, count)
