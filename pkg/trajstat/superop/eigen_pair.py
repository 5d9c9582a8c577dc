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
from dataclasses import dataclass
from enum import Enum
from locale import gettext as _

import numpy as np
import scipy.linalg

from trajstat.errors import DegenerateDominant, EigensolverFailure
from trajstat.errors import NonPositiveEigenvector
from trajstat.utils import ConfigManager
from .super_operator import Picture, SuperOperator, unstack

_logger = logging.getLogger(__name__)


class RankingMode(str, Enum):
    """How eigenvalues compete for dominance."""

    SPECTRAL_RADIUS = "spectral_radius"
    MAX_REAL_PART = "max_real_part"


@dataclass(frozen=True, eq=False)
class EigenPair:
    """Dominant eigenvalue of a map and its two eigenvectors.

    The eigenvector that represents a state has unit trace and the
    observable one satisfies ``tr[observable·state] = 1``. For
    Heisenberg maps the state is ``left`` and the observable is
    ``right``; Schrödinger maps swap the roles.

    Attributes:
        value: The dominant eigenvalue.
        right: Right eigenvector, ``G(right) = value·right``.
        left: Left eigenvector, ``tr[left·G(A)] = value·tr[left·A]``.
        gap: Distance to the subdominant eigenvalue in the ranking key.
        picture: Picture of the map the pair belongs to.
    """

    value: complex
    right: np.ndarray
    left: np.ndarray
    gap: float
    picture: Picture

    @property
    def state(self) -> np.ndarray:
        if self.picture is Picture.HEISENBERG:
            return self.left

        return self.right

    @property
    def observable(self) -> np.ndarray:
        if self.picture is Picture.HEISENBERG:
            return self.right

        return self.left


def is_positive_semidefinite(operator: np.ndarray, tolerance: float) -> bool:
    """Hermitian and without eigenvalues below ``-tolerance·‖A‖``."""

    scale = max(np.linalg.norm(operator, 2), np.finfo(float).tiny)
    hermitian = 0.5 * (operator + operator.conj().T)

    if np.linalg.norm(operator - hermitian) > tolerance * scale:
        return False

    lowest = np.linalg.eigvalsh(hermitian)[0]
    return lowest >= -tolerance * scale


def dominant_eigenpair(
    G: SuperOperator, mode: RankingMode | str, primitive: bool = True
) -> EigenPair:
    """Dominant eigenvalue with normalized left and right eigenvectors.

    Args:
        G: The map to diagonalize.
        mode: ``spectral_radius`` for transfer maps and
            ``max_real_part`` for generators.
        primitive: Require a positive semidefinite right eigenvector.
            Non-ergodic maps whose dominant vector is still meaningful
            pass ``False``.

    Raises:
        EigensolverFailure: If the dense eigensolver fails.
        DegenerateDominant: If the gap is below ``gap_min``.
        NonPositiveEigenvector: If ``primitive`` and the right
            eigenvector is not positive semidefinite.
    """

    mode = RankingMode(mode)
    config = ConfigManager()

    try:
        values, lefts, rights = scipy.linalg.eig(G.matrix, left=True, right=True)
    except (scipy.linalg.LinAlgError, ValueError) as e:
        raise EigensolverFailure(str(e)) from e

    if not np.all(np.isfinite(values)):
        raise EigensolverFailure(_("Eigensolver returned non finite values"))

    if mode is RankingMode.SPECTRAL_RADIUS:
        keys = np.abs(values)
    else:
        keys = values.real

    order = np.argsort(-keys, kind="stable")
    first = order[0]
    gap = float(keys[first] - keys[order[1]]) if len(order) > 1 else np.inf

    if gap < config.get_tolerance("gap_min"):
        raise DegenerateDominant(
            _("Dominant eigenvalue %s is not isolated (gap %.3g)")
            % (values[first], gap),
            gap,
        )

    value = complex(values[first])
    right = unstack(rights[:, first], G.dim)
    left = unstack(lefts[:, first], G.dim).conj().T

    pair = _normalize(EigenPair(value, right, left, gap, G.picture))

    if primitive:
        tolerance = config.get_tolerance("positivity")

        if not is_positive_semidefinite(pair.right, tolerance):
            raise NonPositiveEigenvector(
                _("Dominant right eigenvector is not positive semidefinite")
            )

    residual = np.linalg.norm(G.apply(pair.right) - value * pair.right)
    scale = np.linalg.norm(pair.right)

    if residual > 1e-8 * scale:
        _logger.warning(
            "Large eigenvector residual",
            extra={"residual": float(residual), "value": str(value)},
        )

    return pair


def _normalize(pair: EigenPair) -> EigenPair:
    """Unit trace state, unit overlap observable."""

    state, observable = pair.state, pair.observable
    trace = np.trace(state)

    if abs(trace) < np.finfo(float).eps * np.linalg.norm(state):
        raise NonPositiveEigenvector(_("Dominant state eigenvector is traceless"))

    state = state / trace
    overlap = np.trace(observable @ state)

    if abs(overlap) < np.finfo(float).eps * np.linalg.norm(observable):
        raise DegenerateDominant(_("Dominant eigenvectors are orthogonal"))

    observable = observable / overlap

    if pair.picture is Picture.HEISENBERG:
        right, left = observable, state
    else:
        right, left = state, observable

    return EigenPair(pair.value, right, left, pair.gap, pair.picture)
