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

from dataclasses import dataclass
from locale import gettext as _
from typing import Optional, Sequence

import numpy as np

from trajstat.errors import NonConvexInput
from trajstat.generators import EnsembleKind

# Allowed negative curvature of a sampled convex potential
_CONVEXITY_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class RateFunction:
    """Large deviation rate function sampled on an intensive grid.

    Attributes:
        grid: Intensive values in increasing order, ``t`` for the
            x-ensemble or ``k`` for the s-ensemble.
        values: The rate function at each grid point.
        orientation: Ensemble of the potential it was built from.
    """

    grid: np.ndarray
    values: np.ndarray
    orientation: EnsembleKind

    @property
    def argmin(self) -> float:
        """Typical value of the intensive quantity."""

        return float(self.grid[np.argmin(self.values)])

    def evaluate(self, value: float) -> float:
        """Linear interpolation between grid points."""

        return float(np.interp(value, self.grid, self.values))

    def to_dict(self) -> dict:
        return {
            "orientation": self.orientation.value,
            "grid": self.grid.tolist(),
            "values": self.values.tolist(),
            "argmin": self.argmin,
        }


def check_convex(fields: np.ndarray, potentials: np.ndarray) -> None:
    """Raise if the sampled potential bends downwards anywhere.

    Raises:
        NonConvexInput: With the indices of the offending points.
    """

    secants = np.diff(potentials) / np.diff(fields)
    bends = np.diff(secants)
    scale = max(1.0, float(np.max(np.abs(secants)))) if secants.size else 1.0
    offending = np.flatnonzero(bends < -_CONVEXITY_TOL * scale) + 1

    if offending.size:
        raise NonConvexInput(
            _("Potential is not convex at %d grid points") % offending.size,
            offending.tolist(),
        )


def legendre_rate(
    fields: Sequence[float],
    potentials: Sequence[float],
    orientation: EnsembleKind | str,
    slopes: Optional[Sequence[float]] = None,
) -> RateFunction:
    """Rate function ``sup_f [−ψ(f) − v·f]`` by a discrete transform.

    The intensive grid is induced by the derivative of the potential,
    ``v = −ψ'(f)``. When ``slopes`` is not given it is estimated with
    second order finite differences of the samples.

    Args:
        fields: Strictly increasing field values ``x`` or ``s``.
        potentials: The convex potential at each field.
        orientation: Ensemble the potential belongs to.
        slopes: Optional exact derivatives at each field.

    Raises:
        ValueError: If the grid is too short or not increasing.
        NonConvexInput: If the potential is not convex.
    """

    orientation = EnsembleKind(orientation)
    fields = np.asarray(fields, dtype=float)
    potentials = np.asarray(potentials, dtype=float)

    if fields.shape != potentials.shape or fields.size < 3:
        raise ValueError(_("Need at least three matching samples"))

    if np.any(np.diff(fields) <= 0):
        raise ValueError(_("Field grid must be strictly increasing"))

    check_convex(fields, potentials)

    if slopes is None:
        slopes = np.gradient(potentials, fields, edge_order=2)

    grid = -np.asarray(slopes, dtype=float)[::-1]
    values = np.max(-potentials[None, :] - grid[:, None] * fields[None, :], axis=1)

    return RateFunction(grid=grid, values=values, orientation=orientation)
