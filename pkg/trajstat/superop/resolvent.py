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
from locale import gettext as _

import numpy as np
import scipy.linalg

from trajstat.errors import DomainError, SingularSolve
from trajstat.utils import ConfigManager, tolerance_cache
from .super_operator import SuperOperator, stack, unstack

_logger = logging.getLogger(__name__)


def check_field(x: float, x_min: float) -> None:
    """Reject fields at or too close to the stability bound.

    Raises:
        DomainError: If ``x ≤ x_min + margin``.
    """

    margin = ConfigManager().get_tolerance("x_min_margin")

    if not np.real(x) > x_min + margin:
        raise DomainError(
            _("Field x = %.17g is not above x_min = %.17g") % (np.real(x), x_min)
        )


class Resolvent:
    """Factorized ``(x·Id + G)`` ready for repeated solves.

    Args:
        generator: The map ``G``, usually ℛ or its adjoint.
        x: The field added to the diagonal.
        x_min: Stability bound of the model; when given, fields not
            strictly above it are refused.

    Raises:
        DomainError: If ``x`` is not admissible.
        SingularSolve: If the condition number exceeds ``cond_max``.
    """

    def __init__(
        self, generator: SuperOperator, x: complex, x_min: float | None = None
    ) -> None:
        if x_min is not None:
            check_field(x, x_min)

        self._generator = generator
        self._x = x

        shifted = generator.shifted(x).matrix
        cond_max = ConfigManager().get_tolerance("cond_max")
        self.condition = float(np.linalg.cond(shifted))

        if not np.isfinite(self.condition) or self.condition > cond_max:
            raise SingularSolve(
                _("Resolvent at x = %s has condition number %.3g")
                % (x, self.condition),
                self.condition,
            )

        self._factors = scipy.linalg.lu_factor(shifted, check_finite=False)
        _logger.debug("Resolvent at x=%r, condition %.3g", x, self.condition)

    @property
    def x(self) -> complex:
        return self._x

    @property
    def picture(self):
        return self._generator.picture

    def solve(self, operator: np.ndarray) -> np.ndarray:
        """Return ``B`` with ``(x·Id + G)(B) = operator``."""

        vector = scipy.linalg.lu_solve(self._factors, stack(operator))
        return unstack(vector, self._generator.dim)

    def solve_matrix(self, matrix: np.ndarray) -> np.ndarray:
        """Apply the inverse to every column of a ``d²×n`` matrix."""

        return scipy.linalg.lu_solve(self._factors, matrix)

    def as_superoperator(self) -> SuperOperator:
        """The inverse map ``(x·Id + G)^{-1}`` as a dense matrix."""

        size = self._generator.dim ** 2
        inverse = self.solve_matrix(np.eye(size, dtype=complex))

        return SuperOperator(inverse, self.picture, self._generator.dim)


@tolerance_cache("x_min_margin", "cond_max", maxsize=64)
def cached_resolvent(
    generator: SuperOperator, x: complex, x_min: float | None = None
) -> Resolvent:
    """One factorization per ``(generator, x)`` pair."""

    return Resolvent(generator, x, x_min)


def resolvent_solve(
    R: SuperOperator, x: complex, A: np.ndarray, x_min: float | None = None
) -> np.ndarray:
    """Solve ``(x·Id + ℛ)(B) = A`` for ``B``."""

    return cached_resolvent(R, x, x_min).solve(A)
