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
from locale import gettext as _

import numpy as np
import scipy.linalg

from trajstat.errors import EigensolverFailure
from trajstat.utils import ConfigManager
from .lindblad_model import LindbladModel

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EffectiveHamiltonian:
    """Generator of the contraction between two consecutive jumps.

    Attributes:
        matrix: ``H_eff = H − (i/2) Σ_i L_i†L_i``.
        eigenvalues: Complex eigenvalues of ``H_eff``.
        eigenvectors: Right eigenvectors as columns.
        x_min: Stability bound ``2·max Im λ_j``, never positive.
    """

    matrix: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    x_min: float

    @property
    def is_stable(self) -> bool:
        """Whether every eigenvalue decays strictly."""

        tol_eig = ConfigManager().get_tolerance("tol_eig")
        return self.x_min < -tol_eig


def effective_hamiltonian(model: LindbladModel) -> EffectiveHamiltonian:
    """Build ``H_eff`` and its spectrum.

    Raises:
        EigensolverFailure: If the eigendecomposition does not converge
            or produces growing modes beyond the eigenvalue tolerance.
    """

    matrix = model.hamiltonian - 0.5j * model.jump_sum

    try:
        eigenvalues, eigenvectors = scipy.linalg.eig(matrix)
    except (scipy.linalg.LinAlgError, ValueError) as e:
        raise EigensolverFailure(str(e)) from e

    if not np.all(np.isfinite(eigenvalues)):
        raise EigensolverFailure(_("Effective Hamiltonian has no finite spectrum"))

    tol_eig = ConfigManager().get_tolerance("tol_eig")
    x_min = 2.0 * float(np.max(eigenvalues.imag))

    if x_min > 2.0 * tol_eig:
        raise EigensolverFailure(
            _("Effective Hamiltonian has a growing mode (x_min = %.3g)") % x_min
        )

    x_min = min(x_min, 0.0)
    _logger.debug("Effective Hamiltonian of %s has x_min=%r", model.name, x_min)

    return EffectiveHamiltonian(matrix, eigenvalues, eigenvectors, x_min)
